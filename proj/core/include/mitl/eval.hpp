#pragma once

#include "mitl/formula.hpp"
#include "mitl/interval_set.hpp"
#include "mitl/signal.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace mitl {

/// The two satisfaction relations. They differ only on Release: Old uses the
/// two-disjunct definition under which Until and Release fail to be duals,
/// New adds the third, three-variable disjunct that repairs duality.
enum class Semantics { Old, New };

const char* semantics_name(Semantics sem);

/// Computes exact truth sets {t >= 0 : f^t satisfies phi} by direct interval
/// algebra per connective; subformula results are memoized per instance.
class Evaluator {
public:
    Evaluator(const Signal& signal, Semantics sem) : signal_(&signal), sem_(sem) {}

    const IntervalSet& truth_set(const Formula& phi);

    /// Truth sets of every subformula evaluated so far.
    const std::unordered_map<const Formula::Node*, IntervalSet>& cache() const { return cache_; }

private:
    IntervalSet compute(const Formula& phi);
    IntervalSet eval_until(const IntervalSet& s1, const IntervalSet& s2, const Interval& itv) const;
    IntervalSet eval_release(const IntervalSet& s1, const IntervalSet& s2, const Interval& itv) const;

    const Signal* signal_;
    Semantics sem_;
    std::unordered_map<const Formula::Node*, IntervalSet> cache_;
};

IntervalSet truth_set(const Signal& f, const Formula& phi, Semantics sem);

/// Satisfaction at time 0.
bool sat(const Signal& f, const Formula& phi, Semantics sem);

/// Truth set of N phi from the truth set of phi: every member of positive
/// width contributes [inf, sup).
IntervalSet next_truth_set(const IntervalSet& s);

enum class Side { Left, Right };

/// Decides the finite-variability implication at point r against the truth
/// set s: if s is visited on every one-sided neighborhood of r then some
/// one-sided neighborhood of r lies entirely inside s. Requires r > 0 for
/// the left side.
bool fvar_at(const IntervalSet& s, const Rational& r, Side side);

struct DualityReport {
    Formula formula;
    Semantics semantics = Semantics::New;
    IntervalSet set_phi;
    IntervalSet set_nnf;
    bool equal = false;
    IntervalSet mismatch;  // symmetric difference
};

/// Compares the truth set of phi with the truth set of nnf(phi) under the
/// given semantics. Equal under New for every signal; may differ under Old.
DualityReport duality_check(const Signal& f, const Formula& phi, Semantics sem);

struct BridgeReport {
    Formula formula;
    Formula rewritten;
    IntervalSet set_new;
    IntervalSet set_old_rewritten;
    bool equal = false;
    IntervalSet mismatch;
};

/// Checks truth_set(f, phi, New) == truth_set(f, to_old(phi), Old).
BridgeReport bridge_check(const Signal& f, const Formula& phi);

struct AgreementReport {
    bool agree = true;
    std::size_t points_checked = 0;
    std::optional<Rational> first_disagreement;
};

/// Evaluates phi's truth set, then compares set membership against the
/// pointwise oracle on the full critical grid: breakpoints of the signal and
/// of every subformula's truth set, midpoints of consecutive grid points,
/// and one point beyond the last breakpoint. Both sides are piecewise
/// constant with breakpoints inside the grid, so agreement on the grid
/// implies agreement everywhere.
AgreementReport engine_oracle_agreement(const Signal& f, const Formula& phi, Semantics sem);

/// Pointwise brute-force decision of the satisfaction relation, independent
/// of the interval-algebra engine: quantifiers are decided by enumerating
/// representatives of the finitely many cells that signal breakpoints and
/// decoration endpoints induce. Results are memoized per (formula, time).
class Oracle {
public:
    explicit Oracle(const Signal& signal) : signal_(&signal) {}

    bool sat_at(const Formula& phi, const Rational& t, Semantics sem);

private:
    struct Key {
        const Formula::Node* node;
        Rational time;
        Semantics sem;
        bool operator==(const Key& o) const {
            return node == o.node && sem == o.sem && time == o.time;
        }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = std::hash<const void*>{}(k.node);
            h = h * 1000003 ^ k.time.hash();
            h = h * 1000003 ^ static_cast<std::size_t>(k.sem);
            return h;
        }
    };

    bool eval(const Formula& phi, const Rational& t, Semantics sem);
    const std::vector<Rational>& critical_points(const Formula& phi);

    const Signal* signal_;
    std::unordered_map<Key, bool, KeyHash> value_cache_;
    std::unordered_map<const Formula::Node*, std::vector<Rational>> crit_cache_;
};

bool oracle_sat(const Signal& f, const Formula& phi, const Rational& t, Semantics sem);

}  // namespace mitl
