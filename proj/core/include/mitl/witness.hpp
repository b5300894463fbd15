#pragma once

#include "mitl/eval.hpp"

#include <array>
#include <optional>
#include <string>

namespace mitl {

/// Step size of a non-empty bounded interval with inf > 0: the width when it
/// is smaller than the infimum, the infimum otherwise. Throws
/// std::invalid_argument when the interval is unbounded, zero-anchored or
/// empty.
Rational step_size(const Interval& i);

/// Clock budget for monitoring one bounded positive decoration: the number of
/// simultaneously open proof obligations, twice that (two clocks per
/// obligation), and the conservative figure of four clocks per obligation.
struct ClockBound {
    Rational obligations;
    Rational until_clock_bound;
    Rational conservative_bound;
};
ClockBound clock_bound(const Interval& i);

/// Witness point for an Until obligation: anchored at r, certifying time w,
/// with kind 1 (the certified point itself satisfies the right operand),
/// kind 2 (the right operand holds on a left neighborhood of w) or kind 3
/// (both operands hold on a right neighborhood of w).
struct UntilWitness {
    Rational r;
    Rational w;
    int kind = 1;
};

/// Witness interval for a Release obligation, kinds 1-4.
struct ReleaseWitness {
    Interval interval;
    int kind = 1;
};

/// Decides the kind's witness predicate over (r, w) against the truth sets of
/// phi1 and phi2 under the three-variable semantics.
bool until_witness_holds(const Signal& f, const Formula& phi1, const Formula& phi2,
                         const Rational& r, const Rational& w, int kind);

/// Times t with r <= t whose distance to w lands in the kind's variant of i;
/// empty when the witness predicate fails.
IntervalSet until_proof_set(const Signal& f, const Formula& phi1, const Formula& phi2,
                            const Rational& r, const Rational& w, const Interval& i, int kind);

bool release_witness_holds(const Signal& f, const Formula& phi1, const Formula& phi2,
                           const Interval& witness, int kind);

/// Times t whose whole obligation window t + j is certified by the witness
/// interval, per the kind's row; empty when the witness predicate fails.
IntervalSet release_proof_set(const Signal& f, const Formula& phi1, const Formula& phi2,
                              const Interval& witness, const Interval& j, int kind);

/// Decomposition of truth_set(f, phi1 U_i phi2, New) restricted to
/// [0, step(i)) into at most two strictly ordered intervals, with an
/// extracted witness covering each non-empty part.
struct UntilPartition {
    Rational step;
    IntervalSet truth;                                  // within [0, step)
    std::array<Interval, 2> parts;                      // T1, T2 (possibly empty)
    std::array<std::optional<UntilWitness>, 2> witnesses;
    bool ok = false;
    std::string issue;                                  // set when !ok
};
UntilPartition until_partition(const Signal& f, const Formula& phi1, const Formula& phi2,
                               const Interval& i);

/// Release analogue: at most four strictly ordered intervals within
/// [0, step(j)); T1 carries a kind-2 witness inside (0, step), T2 a kind-1
/// witness, T3 a kind-4 witness and T4 one of kinds 2-4, all inside
/// [step, step + sup j).
struct ReleasePartition {
    Rational step;
    IntervalSet truth;
    std::array<Interval, 4> parts;
    std::array<std::optional<ReleaseWitness>, 4> witnesses;
    bool ok = false;
    std::string issue;
};
ReleasePartition release_partition(const Signal& f, const Formula& phi1, const Formula& phi2,
                                   const Interval& j);

}  // namespace mitl
