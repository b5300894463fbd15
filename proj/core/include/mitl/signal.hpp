#pragma once

#include "mitl/interval_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mitl {

/// Raised when a segment list does not describe a finitely-variable signal.
struct SignalError : std::runtime_error {
    enum class Kind { Gap, Overlap, NotCoveringZero, MissingTail, NegativeTime, Malformed };

    SignalError(Kind kind, std::string message) : std::runtime_error(std::move(message)), kind(kind) {}
    Kind kind;
};

/// A finitely-variable signal: a finite partition of [0, inf) into interval
/// segments, each carrying the set of atomic propositions true throughout it.
/// Canonical form merges adjacent segments with equal proposition sets.
class Signal {
public:
    using Segment = std::pair<Interval, std::set<std::string>>;

    /// Checks that the segments partition [0, inf) (diagnosing gaps, overlaps,
    /// a missing start or a finite tail) and returns the canonical signal.
    /// Segments may be given in any order; two segments may share a boundary
    /// point only when their proposition sets agree.
    static Signal validate(std::vector<Segment> raw);

    /// A signal that is constant over all of [0, inf).
    static Signal constant(std::set<std::string> props);

    const std::vector<Segment>& segments() const { return segments_; }

    /// Propositions true at time t >= 0.
    const std::set<std::string>& value_at(const Rational& t) const;

    /// The signal t -> value_at(r + t), for r >= 0.
    Signal shift(const Rational& r) const;

    /// {t : p in value_at(t)} as a canonical interval set.
    IntervalSet atom_truth_set(const std::string& p) const;

    /// All propositions mentioned by any segment.
    std::set<std::string> props() const;

    /// Finite segment boundaries, sorted and distinct (0 included).
    std::vector<Rational> breakpoints() const;

    friend bool operator==(const Signal& a, const Signal& b) { return a.segments_ == b.segments_; }

    std::string str() const;

    /// Serialized form: a JSON array of {"interval": "[0,1]", "props": ["p"]}
    /// objects; rationals inside interval strings are exact ("1/3", "0.01").
    static Signal from_json_text(const std::string& text);
    std::string to_json_text(bool pretty = false) const;

private:
    std::vector<Segment> segments_;
};

std::ostream& operator<<(std::ostream& os, const Signal& s);

/// Deterministic, seed-reproducible signal with at most max_segments segments,
/// rational breakpoints below time_horizon, and proposition sets drawn from
/// props. Generated signals always pass validate.
Signal random_signal(std::uint64_t seed, int max_segments, const Rational& time_horizon,
                     const std::vector<std::string>& props);

}  // namespace mitl
