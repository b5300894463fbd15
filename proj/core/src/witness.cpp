#include "mitl/witness.hpp"

#include <algorithm>
#include <functional>

namespace mitl {

namespace {

const Rational kZero{0};

struct TruthSets {
    IntervalSet s1;
    IntervalSet s2;
};

TruthSets child_sets(const Signal& f, const Formula& phi1, const Formula& phi2) {
    Evaluator ev(f, Semantics::New);
    TruthSets ts;
    ts.s1 = ev.truth_set(phi1);
    ts.s2 = ev.truth_set(phi2);
    return ts;
}

bool until_witness_on(const TruthSets& ts, const Rational& r, const Rational& w, int kind) {
    if (r.is_negative() || w.is_negative()) return false;
    const TimeBound rb{r};
    const TimeBound wb{w};
    switch (kind) {
        case 1:
            return r <= w && ts.s1.contains_open(rb, wb) && ts.s2.contains(w);
        case 2:
            return r < w && ts.s1.contains_open(rb, wb) && ts.s2.left_limit_in(w);
        case 3: {
            if (!(r < w)) return false;
            bool s1_past_w = false;  // one member carries (r, w + eps)
            for (const Interval& m : ts.s1.members()) {
                if (m.inf() <= rb && wb < m.sup()) {
                    s1_past_w = true;
                    break;
                }
            }
            return s1_past_w && ts.s2.right_limit_in(w);
        }
        default: throw std::invalid_argument("until witness kind must be 1, 2 or 3");
    }
}

IntervalSet until_proof_on(const TruthSets& ts, const Rational& r, const Rational& w,
                           const Interval& i, int kind) {
    if (!until_witness_on(ts, r, w, kind)) return IntervalSet::empty_set();
    Interval v;
    switch (kind) {
        case 1: v = i; break;
        case 2: v = i.open_l_close_r(); break;
        case 3: v = i.open_r_close_l(); break;
        default: return IntervalSet::empty_set();
    }
    // {t : w - t in v} = w - v, clipped to t >= r and t >= 0.
    Interval band = v.negate().shift(w);
    band = band.intersect(Interval::at_least(r)).intersect(Interval::nonneg());
    return IntervalSet(band);
}

bool release_witness_on(const TruthSets& ts, const Interval& w, int kind) {
    switch (kind) {
        case 1:
            return ts.s2.contains_interval(w);
        case 2:
            return !w.is_empty() && w.left_closed_def() && ts.s1.contains_interval(w);
        case 3:
            return !w.is_empty() && w.right_closed_def() && ts.s2.contains_interval(w) &&
                   w.sup().is_finite() && ts.s1.contains(w.sup().finite());
        case 4: {
            if (w.close_left().is_empty() || !w.right_closed_def()) return false;
            if (!ts.s2.contains_interval(w)) return false;
            // With an unbounded witness the required right neighborhood of the
            // supremum is empty.
            if (!w.sup().is_finite()) return true;
            return ts.s1.right_limit_in(w.sup().finite());
        }
        default: throw std::invalid_argument("release witness kind must be 1, 2, 3 or 4");
    }
}

IntervalSet release_proof_on(const TruthSets& ts, const Interval& w, const Interval& j, int kind) {
    if (!release_witness_on(ts, w, kind)) return IntervalSet::empty_set();
    Interval region;
    switch (kind) {
        case 1:
            region = fit_shifts(w, j);
            break;
        case 2: {
            if (!(j.inf() > TimeBound(kZero))) return IntervalSet::empty_set();
            const Interval beyond_inf(w.inf(), TimeBound::pos_inf(), false, false);
            region = fit_shifts(beyond_inf, j)
                         .intersect(Interval(TimeBound::neg_inf(), w.sup(), false, false));
            break;
        }
        case 3:
        case 4: {
            const Interval reach(w.inf(), TimeBound::pos_inf(), w.lo_closed(), false);  // w + [0, inf)
            region = fit_shifts(reach, j)
                         .intersect(Interval(TimeBound::neg_inf(), w.sup(), false, kind == 4));
            break;
        }
        default: return IntervalSet::empty_set();
    }
    return IntervalSet(region.intersect(Interval::nonneg()));
}

}  // namespace

Rational step_size(const Interval& i) {
    if (i.is_empty() || !(i.inf() > TimeBound(kZero)) || !i.sup().is_finite()) {
        throw std::invalid_argument("step size needs a non-empty bounded interval with inf > 0, got " +
                                    i.str());
    }
    const Rational lo = i.inf().finite();
    const Rational width = i.sup().finite() - lo;
    return width < lo ? width : lo;
}

ClockBound clock_bound(const Interval& i) {
    const Rational s = step_size(i);
    const Rational obligations = (i.inf().finite() / s).ceil() + Rational(1);
    return {obligations, obligations * Rational(2), obligations * Rational(4)};
}

bool until_witness_holds(const Signal& f, const Formula& phi1, const Formula& phi2,
                         const Rational& r, const Rational& w, int kind) {
    return until_witness_on(child_sets(f, phi1, phi2), r, w, kind);
}

IntervalSet until_proof_set(const Signal& f, const Formula& phi1, const Formula& phi2,
                            const Rational& r, const Rational& w, const Interval& i, int kind) {
    return until_proof_on(child_sets(f, phi1, phi2), r, w, i, kind);
}

bool release_witness_holds(const Signal& f, const Formula& phi1, const Formula& phi2,
                           const Interval& witness, int kind) {
    return release_witness_on(child_sets(f, phi1, phi2), witness, kind);
}

IntervalSet release_proof_set(const Signal& f, const Formula& phi1, const Formula& phi2,
                              const Interval& witness, const Interval& j, int kind) {
    return release_proof_on(child_sets(f, phi1, phi2), witness, j, kind);
}

// ---------------------------------------------------------------------------
// Partition extraction
// ---------------------------------------------------------------------------

namespace {

// Candidate witness points for one maximal interval of the Until truth set:
// the segment endpoints shifted by the decoration endpoints, and the child
// truth set breakpoints within reach.
std::vector<Rational> until_candidates(const TruthSets& ts, const Interval& seg, const Interval& i) {
    const Rational r0 = seg.inf().finite();
    const Rational r1 = seg.sup().finite();
    const Rational lo = i.inf().finite();
    const Rational hi = i.sup().finite();
    std::vector<Rational> out{r0 + lo, r0 + hi, r1 + lo, r1 + hi};
    const Rational window_hi = r1 + hi;
    for (const IntervalSet* s : {&ts.s1, &ts.s2}) {
        for (const Rational& b : s->breakpoints()) {
            if (b >= r0 && b <= window_hi) out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<UntilWitness> extract_until_witness(const TruthSets& ts, const Interval& seg,
                                                  const Interval& i, bool first_slot) {
    const Rational r0 = seg.inf().finite();
    const Interval kind1_offsets = first_slot ? i : i.close_right();
    const Interval alt_offsets = i.close_right();
    const int alt_kind = first_slot ? 2 : 3;
    for (const Rational& w : until_candidates(ts, seg, i)) {
        const Rational offset = w - r0;
        if (kind1_offsets.contains(offset) && until_witness_on(ts, r0, w, 1) &&
            until_proof_on(ts, r0, w, i, 1).contains_interval(seg)) {
            return UntilWitness{r0, w, 1};
        }
        if (alt_offsets.contains(offset) && until_witness_on(ts, r0, w, alt_kind) &&
            until_proof_on(ts, r0, w, i, alt_kind).contains_interval(seg)) {
            return UntilWitness{r0, w, alt_kind};
        }
    }
    return std::nullopt;
}

}  // namespace

UntilPartition until_partition(const Signal& f, const Formula& phi1, const Formula& phi2,
                               const Interval& i) {
    UntilPartition out;
    out.step = step_size(i);

    Evaluator ev(f, Semantics::New);
    TruthSets ts;
    ts.s1 = ev.truth_set(phi1);
    ts.s2 = ev.truth_set(phi2);
    const IntervalSet whole = ev.truth_set(Formula::until(phi1, phi2, i));
    out.truth = whole.intersect(Interval::right_open(kZero, out.step));

    const auto& segs = out.truth.members();
    if (segs.size() > 2) {
        out.issue = "truth set splits into " + std::to_string(segs.size()) + " intervals within a step";
        return out;
    }
    if (segs.empty()) {
        out.ok = true;
        return out;
    }
    if (segs.size() == 2) {
        auto w1 = extract_until_witness(ts, segs[0], i, true);
        auto w2 = extract_until_witness(ts, segs[1], i, false);
        if (!w1 || !w2) {
            out.issue = std::string("no witness covers ") + (!w1 ? "T1" : "T2");
            return out;
        }
        out.parts = {segs[0], segs[1]};
        out.witnesses = {w1, w2};
        out.ok = true;
        return out;
    }
    if (auto w1 = extract_until_witness(ts, segs[0], i, true)) {
        out.parts[0] = segs[0];
        out.witnesses[0] = w1;
        out.ok = true;
        return out;
    }
    if (auto w2 = extract_until_witness(ts, segs[0], i, false)) {
        out.parts[1] = segs[0];
        out.witnesses[1] = w2;
        out.ok = true;
        return out;
    }
    out.issue = "no witness covers the single interval";
    return out;
}

namespace {

// Validates one candidate and wraps it.
std::optional<ReleaseWitness> accept_release(const TruthSets& ts, const Interval& candidate,
                                             const Interval& window, const Interval& j,
                                             const Interval& seg, int kind) {
    if (candidate.is_empty() || !window.contains(candidate)) return std::nullopt;
    if (!release_witness_on(ts, candidate, kind)) return std::nullopt;
    if (!release_proof_on(ts, candidate, j, kind).contains_interval(seg)) return std::nullopt;
    return ReleaseWitness{candidate, kind};
}

// Kind 2: a left-closed interval on which phi1 holds, starting before the
// segment's obligation windows and reaching past the segment.
std::optional<ReleaseWitness> find_release_kind2(const TruthSets& ts, const Interval& seg,
                                                 const Interval& j, const Interval& window) {
    const Rational anchor_limit = seg.inf().finite() + j.inf().finite();
    const bool anchor_strict = seg.lo_closed() && j.lo_closed();
    const Rational seg_sup = seg.sup().finite();

    for (const Interval& m : ts.s1.members()) {
        const Interval k = m.intersect(window);
        if (k.is_empty()) continue;

        std::vector<Interval> anchors;  // candidate left-closed starting points, preferred first
        auto add_anchor = [&](const Rational& a) {
            if (!k.contains(a)) return;
            if (TimeBound(a) > TimeBound(anchor_limit)) return;
            if (anchor_strict && a == anchor_limit) return;
            anchors.push_back(Interval(TimeBound(a), k.hi(), true, k.hi_closed()));
        };
        add_anchor(anchor_limit);
        if (k.lo().is_finite()) {
            add_anchor(midpoint(k.lo().finite(), mitl::min(anchor_limit, k.sup().finite())));
            if (k.lo_closed()) add_anchor(k.lo().finite());
        }

        for (const Interval& tail : anchors) {
            // Prefer the shortest sufficient witness before the full tail.
            std::vector<Interval> candidates;
            if (!seg.hi_closed()) {
                candidates.push_back(Interval(tail.lo(), TimeBound(seg_sup), true, false));
            } else if (TimeBound(seg_sup) < tail.sup()) {
                const Rational reach = tail.hi().is_finite()
                                           ? midpoint(seg_sup, tail.hi().finite())
                                           : seg_sup + Rational(1);
                candidates.push_back(Interval(tail.lo(), TimeBound(reach), true, true));
            }
            candidates.push_back(tail);
            for (const Interval& cand : candidates) {
                if (auto w = accept_release(ts, cand, window, j, seg, 2)) return w;
            }
        }
    }
    return std::nullopt;
}

// Kinds 3 and 4: a right-closed interval on which phi2 holds, with phi1 at
// (kind 3) or just after (kind 4) its supremum.
std::optional<ReleaseWitness> find_release_kind34(const TruthSets& ts, const Interval& seg,
                                                  const Interval& j, const Interval& window,
                                                  int kind) {
    const Rational start = seg.inf().finite() + j.inf().finite();
    const Rational seg_sup = seg.sup().finite();

    std::vector<Rational> sups{seg_sup};
    for (const IntervalSet* s : {&ts.s1, &ts.s2}) {
        for (const Rational& b : s->breakpoints()) {
            if (TimeBound(b) >= TimeBound(seg_sup) && window.contains(b)) sups.push_back(b);
        }
    }
    std::sort(sups.begin(), sups.end());
    sups.erase(std::unique(sups.begin(), sups.end()), sups.end());

    for (const Rational& b : sups) {
        for (const bool lo_closed : {true, false}) {
            const Interval cand(TimeBound(start), TimeBound(b), lo_closed, true);
            if (auto w = accept_release(ts, cand, window, j, seg, kind)) return w;
        }
    }
    return std::nullopt;
}

std::optional<ReleaseWitness> extract_release_witness(const TruthSets& ts, const Interval& seg,
                                                      const Interval& j, const Rational& step,
                                                      int slot) {
    const Interval early_window = Interval::open(kZero, step);
    const Interval late_window =
        Interval::right_open(step, step + j.sup().finite());
    switch (slot) {
        case 0: return find_release_kind2(ts, seg, j, early_window);
        case 1: {
            const Interval cand = seg.minkowski_sum(j);
            return accept_release(ts, cand, late_window, j, seg, 1);
        }
        case 2: return find_release_kind34(ts, seg, j, late_window, 4);
        case 3: {
            if (auto w = find_release_kind2(ts, seg, j, late_window)) return w;
            if (auto w = find_release_kind34(ts, seg, j, late_window, 3)) return w;
            return find_release_kind34(ts, seg, j, late_window, 4);
        }
        default: return std::nullopt;
    }
}

}  // namespace

ReleasePartition release_partition(const Signal& f, const Formula& phi1, const Formula& phi2,
                                   const Interval& j) {
    ReleasePartition out;
    out.step = step_size(j);

    Evaluator ev(f, Semantics::New);
    TruthSets ts;
    ts.s1 = ev.truth_set(phi1);
    ts.s2 = ev.truth_set(phi2);
    const IntervalSet whole = ev.truth_set(Formula::release(phi1, phi2, j));
    out.truth = whole.intersect(Interval::right_open(kZero, out.step));

    const auto& segs = out.truth.members();
    const int n = static_cast<int>(segs.size());
    if (n > 4) {
        out.issue = "truth set splits into " + std::to_string(n) + " intervals within a step";
        return out;
    }
    if (n == 0) {
        out.ok = true;
        return out;
    }

    // Assign segments to increasing theorem slots; memoize per (segment, slot).
    std::array<std::array<std::optional<std::optional<ReleaseWitness>>, 4>, 4> tried;
    auto attempt = [&](int seg_idx, int slot) -> const std::optional<ReleaseWitness>& {
        auto& cell = tried[seg_idx][slot];
        if (!cell) cell = extract_release_witness(ts, segs[seg_idx], j, out.step, slot);
        return *cell;
    };

    std::array<int, 4> chosen{};
    std::function<bool(int, int)> assign = [&](int seg_idx, int min_slot) {
        if (seg_idx == n) return true;
        for (int slot = min_slot; slot < 4; ++slot) {
            if (4 - slot < n - seg_idx) break;  // not enough slots left
            if (attempt(seg_idx, slot)) {
                chosen[seg_idx] = slot;
                if (assign(seg_idx + 1, slot + 1)) return true;
            }
        }
        return false;
    };
    if (!assign(0, 0)) {
        out.issue = "no slot assignment admits witnesses for every interval";
        return out;
    }
    for (int k = 0; k < n; ++k) {
        out.parts[chosen[k]] = segs[k];
        out.witnesses[chosen[k]] = attempt(k, chosen[k]);
    }
    out.ok = true;
    return out;
}

}  // namespace mitl
