#pragma once

#include "mitl/interval.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mitl {

/// Raised by Formula::parse with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position(position) {}
    std::size_t position;
};

struct FragmentReport;
struct NormalFormReport;

/// An MTL formula. Nodes are interned, so structural equality is pointer
/// equality and common subformulas are shared. Values are immutable.
///
/// The stored tree uses only the eight core constructors; the derived
/// operators are expanded when a formula is built or parsed:
///   F_I x  =  true U_I x,   G_I x  =  false R_I x,   N x  =  x R_(0,inf) x.
class Formula {
public:
    enum class Op : std::uint8_t { Top, Bottom, Atom, Not, Or, And, Until, Release };

    struct Node;

    Formula() : Formula(top()) {}

    static Formula top();
    static Formula bottom();
    static Formula atom(std::string_view name);
    static Formula negation(const Formula& f);
    static Formula disjunction(const Formula& a, const Formula& b);
    static Formula conjunction(const Formula& a, const Formula& b);
    /// Decoration intervals must lie inside [0, inf).
    static Formula until(const Formula& a, const Formula& b, const Interval& i);
    static Formula release(const Formula& a, const Formula& b, const Interval& i);
    static Formula eventually(const Formula& f, const Interval& i);
    static Formula always(const Formula& f, const Interval& i);
    /// N f = f R_(0,inf) f: f becomes true and stays true for a while.
    static Formula op_n(const Formula& f);

    Op op() const;
    const std::string& atom_name() const;
    Formula lhs() const;
    Formula rhs() const;
    const Interval& interval() const;

    bool is_temporal() const { return op() == Op::Until || op() == Op::Release; }

    friend bool operator==(const Formula& a, const Formula& b) { return a.node_ == b.node_; }
    friend bool operator<(const Formula& a, const Formula& b) { return a.node_ < b.node_; }

    /// Stable identity usable as a memoization key.
    const Node* node() const { return node_.get(); }

    /// Grammar (ASCII): atoms [a-zA-Z_][a-zA-Z0-9_]*, constants true/false,
    /// operators ! & | U R F G N, optional interval suffix on U R F G.
    /// Precedence: !,N bind tightest, then U,R,F,G, then &, then |.
    static Formula parse(std::string_view text);

    /// Canonical text form; parse(str()) reconstructs the same tree.
    std::string str() const;

    /// Negated normal form: negation applied to atoms only.
    Formula nnf() const;
    bool is_in_nnf() const;

    /// Rewrites Release so that satisfaction under the two-quantifier
    /// semantics coincides with this formula under the three-quantifier one;
    /// homomorphic on every other connective.
    Formula to_old() const;

    /// Number of structurally distinct subformulas, including the formula itself.
    std::size_t subformula_dag_size() const;

    /// Number of nodes of the syntax tree (shared subtrees counted once per
    /// occurrence).
    std::size_t tree_size() const;

    std::set<std::string> atoms() const;
    bool is_propositional() const;

    FragmentReport classify() const;
    NormalFormReport normal_form() const;

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Fragment membership and the size measure used by the wide-interval check.
///
/// size_bits = tree node count plus, for every finite decoration endpoint,
/// the bit lengths of its numerator and denominator (0 counts as one bit;
/// infinite endpoints contribute nothing).
struct FragmentReport {
    bool is_mtl = true;
    bool is_mitl = false;
    bool is_mitl0inf = false;
    bool is_mitlwi = false;
    std::size_t size_bits = 0;
    /// max of sup/(sup-inf) over decorations with 0 < inf < sup < inf.
    std::optional<Rational> worst_ratio;
};

/// Per-temporal-subformula normal form tags:
///   1: F_I x with I left-open, inf I = 0, sup I finite
///   2: G_I x with the same interval shape
///   3: unbounded G
///   4: a U_I b with inf I > 0, sup I finite
///   5: a R_I b with inf I > 0, sup I finite
///   6: unbounded U
///   0: none of the six shapes
/// The formula as a whole is in normal form when it is built from literals
/// with conjunction and disjunction over typed temporal subformulas.
struct NormalFormReport {
    bool in_normal_form = false;
    std::vector<std::pair<Formula, int>> temporal_types;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace mitl
