#include "mitl/random_gen.hpp"

#include <algorithm>

namespace mitl {

Signal random_signal(std::uint64_t seed, int max_segments, const Rational& time_horizon,
                     const std::vector<std::string>& props) {
    if (max_segments < 1) throw std::invalid_argument("random_signal: max_segments must be >= 1");
    if (!time_horizon.is_positive()) throw std::invalid_argument("random_signal: non-positive horizon");
    Rng rng(seed);

    const int segments = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_segments)));
    static const std::vector<long> denominators{1, 2, 3, 4, 6, 8, 12};

    std::vector<Rational> cuts;
    for (int k = 0; k < segments - 1; ++k) {
        const long d = rng.pick(denominators);
        const Rational max_num = (time_horizon * Rational(d)).ceil();
        long n_max = std::max(1L, static_cast<long>(max_num.num().get_si()) - 1);
        const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(n_max)));
        Rational cut(num, d);
        if (cut < time_horizon && cut.is_positive()) cuts.push_back(cut);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Signal::Segment> raw;
    Rational lo(0);
    bool lo_closed = true;
    for (const Rational& cut : cuts) {
        const bool cut_goes_left = rng.chance(1, 2);
        std::set<std::string> val;
        for (const std::string& p : props) {
            if (rng.chance(1, 2)) val.insert(p);
        }
        raw.emplace_back(Interval(TimeBound(lo), TimeBound(cut), lo_closed, cut_goes_left), std::move(val));
        lo = cut;
        lo_closed = !cut_goes_left;
    }
    std::set<std::string> tail_val;
    for (const std::string& p : props) {
        if (rng.chance(1, 2)) tail_val.insert(p);
    }
    raw.emplace_back(Interval(TimeBound(lo), TimeBound::pos_inf(), lo_closed, false), std::move(tail_val));
    return Signal::validate(std::move(raw));
}

Interval random_bounded_positive_interval(Rng& rng) {
    static const std::vector<Rational> los{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
    static const std::vector<Rational> widths{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    const Rational lo = rng.pick(los);
    const Rational hi = lo + rng.pick(widths);
    return Interval(TimeBound(lo), TimeBound(hi), rng.chance(1, 2), rng.chance(1, 2));
}

Interval random_decoration(Rng& rng) {
    if (rng.chance(1, 20)) return Interval::empty();
    static const std::vector<Rational> los{Rational(0),     Rational(1, 3), Rational(1, 2),
                                           Rational(1),     Rational(3, 2), Rational(2)};
    const Rational lo = rng.pick(los);
    if (rng.chance(1, 20)) return Interval::singleton(lo.is_positive() ? lo : Rational(1));
    if (rng.chance(1, 4)) {
        // Unbounded decoration, occasionally the untimed shape (0, inf).
        if (rng.chance(1, 2)) return Interval::greater_than(Rational(0));
        return Interval(TimeBound(lo), TimeBound::pos_inf(), rng.chance(1, 2), false);
    }
    static const std::vector<Rational> widths{Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    const Rational hi = lo + rng.pick(widths);
    return Interval(TimeBound(lo), TimeBound(hi), rng.chance(1, 2), rng.chance(1, 2));
}

Formula random_formula(Rng& rng, int max_depth, const std::vector<std::string>& atoms) {
    if (max_depth <= 0 || rng.chance(1, 5)) {
        const std::uint64_t roll = rng.below(12);
        if (roll == 0) return Formula::top();
        if (roll == 1) return Formula::bottom();
        return Formula::atom(rng.pick(atoms));
    }
    const std::uint64_t roll = rng.below(12);
    if (roll < 2) return Formula::negation(random_formula(rng, max_depth - 1, atoms));
    if (roll < 4) {
        return Formula::disjunction(random_formula(rng, max_depth - 1, atoms),
                                    random_formula(rng, max_depth - 1, atoms));
    }
    if (roll < 6) {
        return Formula::conjunction(random_formula(rng, max_depth - 1, atoms),
                                    random_formula(rng, max_depth - 1, atoms));
    }
    const Interval itv = random_decoration(rng);
    Formula a = random_formula(rng, max_depth - 1, atoms);
    Formula b = random_formula(rng, max_depth - 1, atoms);
    if (roll < 9) return Formula::until(a, b, itv);
    return Formula::release(a, b, itv);
}

}  // namespace mitl
