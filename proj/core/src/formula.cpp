#include "mitl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace mitl {

struct Formula::Node {
    Op op;
    std::string atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    Interval itv;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

std::size_t hash_interval(const Interval& i) {
    auto hash_bound = [](const TimeBound& b) -> std::size_t {
        if (b.is_neg_inf()) return 0x51ed2701;
        if (b.is_pos_inf()) return 0x2ca15f0d;
        return b.finite().hash();
    };
    std::size_t h = hash_bound(i.lo());
    h = h * 1000003 ^ hash_bound(i.hi());
    h = h * 1000003 ^ (static_cast<std::size_t>(i.lo_closed()) << 1 | i.hi_closed());
    return h;
}

struct NodeKey {
    Formula::Op op;
    std::string_view atom;
    const Formula::Node* lhs;
    const Formula::Node* rhs;
    Interval itv;

    bool operator==(const NodeKey& o) const {
        return op == o.op && atom == o.atom && lhs == o.lhs && rhs == o.rhs && itv == o.itv;
    }
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = static_cast<std::size_t>(k.op);
        h = h * 1000003 ^ std::hash<std::string_view>{}(k.atom);
        h = h * 1000003 ^ std::hash<const void*>{}(k.lhs);
        h = h * 1000003 ^ std::hash<const void*>{}(k.rhs);
        h = h * 1000003 ^ hash_interval(k.itv);
        return h;
    }
};

// Global intern table. Formulas are values; the table keeps each distinct
// node alive for the lifetime of the process.
std::mutex g_intern_mutex;
std::unordered_map<NodeKey, NodePtr, NodeKeyHash>& intern_table() {
    static auto* table = new std::unordered_map<NodeKey, NodePtr, NodeKeyHash>();
    return *table;
}

NodePtr intern(Formula::Op op, std::string atom, NodePtr lhs, NodePtr rhs, Interval itv) {
    NodeKey key{op, atom, lhs.get(), rhs.get(), itv};
    std::lock_guard<std::mutex> lock(g_intern_mutex);
    auto& table = intern_table();
    if (auto it = table.find(key); it != table.end()) return it->second;
    auto node = std::make_shared<Formula::Node>(
        Formula::Node{op, std::move(atom), std::move(lhs), std::move(rhs), itv});
    NodeKey stable_key{node->op, node->atom, node->lhs.get(), node->rhs.get(), node->itv};
    table.emplace(stable_key, node);
    return node;
}

void require_nonneg_decoration(const Interval& i) {
    if (!i.is_empty() && i.lo() < TimeBound(Rational(0))) {
        throw std::invalid_argument("decoration interval must lie inside [0,inf): " + i.str());
    }
}

const Interval& untimed() {
    static const Interval i = Interval::greater_than(Rational(0));
    return i;
}

}  // namespace

Formula Formula::top() {
    static const Formula f{intern(Op::Top, {}, nullptr, nullptr, Interval())};
    return f;
}

Formula Formula::bottom() {
    static const Formula f{intern(Op::Bottom, {}, nullptr, nullptr, Interval())};
    return f;
}

Formula Formula::atom(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("empty atom name");
    return Formula{intern(Op::Atom, std::string(name), nullptr, nullptr, Interval())};
}

Formula Formula::negation(const Formula& f) {
    return Formula{intern(Op::Not, {}, f.node_, nullptr, Interval())};
}

Formula Formula::disjunction(const Formula& a, const Formula& b) {
    return Formula{intern(Op::Or, {}, a.node_, b.node_, Interval())};
}

Formula Formula::conjunction(const Formula& a, const Formula& b) {
    return Formula{intern(Op::And, {}, a.node_, b.node_, Interval())};
}

Formula Formula::until(const Formula& a, const Formula& b, const Interval& i) {
    require_nonneg_decoration(i);
    return Formula{intern(Op::Until, {}, a.node_, b.node_, i)};
}

Formula Formula::release(const Formula& a, const Formula& b, const Interval& i) {
    require_nonneg_decoration(i);
    return Formula{intern(Op::Release, {}, a.node_, b.node_, i)};
}

Formula Formula::eventually(const Formula& f, const Interval& i) { return until(top(), f, i); }

Formula Formula::always(const Formula& f, const Interval& i) { return release(bottom(), f, i); }

Formula Formula::op_n(const Formula& f) { return release(f, f, untimed()); }

Formula::Op Formula::op() const { return node_->op; }
const std::string& Formula::atom_name() const { return node_->atom; }
Formula Formula::lhs() const { return Formula{node_->lhs}; }
Formula Formula::rhs() const { return Formula{node_->rhs}; }
const Interval& Formula::interval() const { return node_->itv; }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok { End, Ident, Number, True, False, U, R, F, G, N, Not, And, Or, LParen, RParen, LBracket, RBracket, Comma };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    const Token& peek2() {
        if (!has_next_) {
            next_ = lex();
            has_next_ = true;
        }
        return next_;
    }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        if (has_next_) {
            current_ = next_;
            has_next_ = false;
        } else {
            current_ = lex();
        }
    }

    Token lex() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Tok::End, "", start};
        const char c = text_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, std::string(1, c), start};
        };
        switch (c) {
            case '!': return single(Tok::Not);
            case '&': return single(Tok::And);
            case '|': return single(Tok::Or);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '[': return single(Tok::LBracket);
            case ']': return single(Tok::RBracket);
            case ',': return single(Tok::Comma);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '/' || text_[end] == '.')) {
                ++end;
            }
            Token t{Tok::Number, std::string(text_.substr(pos_, end - pos_)), start};
            pos_ = end;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "true") return {Tok::True, word, start};
            if (word == "false") return {Tok::False, word, start};
            if (word == "U") return {Tok::U, word, start};
            if (word == "R") return {Tok::R, word, start};
            if (word == "F") return {Tok::F, word, start};
            if (word == "G") return {Tok::G, word, start};
            if (word == "N") return {Tok::N, word, start};
            return {Tok::Ident, std::move(word), start};
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{};
    Token next_{};
    bool has_next_ = false;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Formula parse_formula() {
        Formula f = parse_or();
        if (lex_.peek().kind != Tok::End) {
            throw ParseError("unexpected trailing input (expected operator or end)", lex_.peek().pos);
        }
        return f;
    }

private:
    Formula parse_or() {
        Formula f = parse_and();
        while (lex_.peek().kind == Tok::Or) {
            lex_.take();
            f = Formula::disjunction(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_until();
        while (lex_.peek().kind == Tok::And) {
            lex_.take();
            f = Formula::conjunction(f, parse_until());
        }
        return f;
    }

    // F and G are prefix operators at the same precedence level as U and R,
    // so their operand extends over a whole U/R expression.
    Formula parse_until() {
        if (lex_.peek().kind == Tok::F || lex_.peek().kind == Tok::G) {
            const bool is_f = lex_.take().kind == Tok::F;
            Interval itv = parse_optional_interval();
            Formula body = parse_until();
            return is_f ? Formula::eventually(body, itv) : Formula::always(body, itv);
        }
        Formula f = parse_unary();
        if (lex_.peek().kind == Tok::U || lex_.peek().kind == Tok::R) {
            const bool is_until = lex_.take().kind == Tok::U;
            Interval itv = parse_optional_interval();
            Formula rhs = parse_until();  // right-associative
            f = is_until ? Formula::until(f, rhs, itv) : Formula::release(f, rhs, itv);
        }
        return f;
    }

    Formula parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Not) {
            lex_.take();
            return Formula::negation(parse_unary());
        }
        if (t.kind == Tok::N) {
            lex_.take();
            return Formula::op_n(parse_unary());
        }
        return parse_primary();
    }

    Formula parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::True: return Formula::top();
            case Tok::False: return Formula::bottom();
            case Tok::Ident: return Formula::atom(t.text);
            case Tok::LParen: {
                Formula f = parse_or();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                throw ParseError("expected an atom, constant, '!', 'N' or '('", t.pos);
        }
    }

    // An interval suffix starts with '[' always; a '(' opens an interval only
    // when a number or "inf" follows (otherwise it is a parenthesized formula).
    Interval parse_optional_interval() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::LBracket) return parse_interval();
        if (t.kind == Tok::LParen) {
            const Token& n = lex_.peek2();
            if (n.kind == Tok::Number || (n.kind == Tok::Ident && n.text == "inf")) return parse_interval();
        }
        return untimed();
    }

    Interval parse_interval() {
        Token open = lex_.take();
        const bool lo_closed = open.kind == Tok::LBracket;
        TimeBound lo = parse_bound();
        expect(Tok::Comma, "','");
        TimeBound hi = parse_bound();
        Token close = lex_.take();
        bool hi_closed;
        if (close.kind == Tok::RBracket) {
            hi_closed = true;
        } else if (close.kind == Tok::RParen) {
            hi_closed = false;
        } else {
            throw ParseError("expected ']' or ')' to close an interval", close.pos);
        }
        Interval itv(lo, hi, lo_closed, hi_closed);
        if (!itv.is_empty() && itv.lo() < TimeBound(Rational(0))) {
            throw ParseError("negative interval endpoint", open.pos);
        }
        return itv;
    }

    TimeBound parse_bound() {
        Token t = lex_.take();
        if (t.kind == Tok::Ident && t.text == "inf") return TimeBound::pos_inf();
        if (t.kind == Tok::Number) {
            auto r = Rational::try_parse(t.text);
            if (!r) throw ParseError("malformed rational '" + t.text + "'", t.pos);
            return TimeBound(*r);
        }
        throw ParseError("expected a rational number or 'inf'", t.pos);
    }

    void expect(Tok kind, const char* what) {
        Token t = lex_.take();
        if (t.kind != kind) throw ParseError(std::string("expected ") + what, t.pos);
    }

    Lexer lex_;
};

}  // namespace

Formula Formula::parse(std::string_view text) { return Parser(text).parse_formula(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_node(const Formula& f, std::string& out);

void print_operand(const Formula& f, std::string& out) {
    switch (f.op()) {
        case Formula::Op::Or:
        case Formula::Op::And:
        case Formula::Op::Until:
        case Formula::Op::Release: {
            // The N sugar binds at the unary level and can stay bare; every
            // other binary form needs parentheses in operand position (an F/G
            // prefix would otherwise absorb a following U/R).
            const bool n_form = f.op() == Formula::Op::Release && f.lhs() == f.rhs() &&
                                f.lhs() != Formula::bottom() &&
                                f.interval() == Interval::greater_than(Rational(0));
            if (n_form) break;
            out += '(';
            print_node(f, out);
            out += ')';
            return;
        }
        default: break;
    }
    print_node(f, out);
}

void print_interval_suffix(const Interval& i, std::string& out) {
    if (i == Interval::greater_than(Rational(0))) return;  // untimed
    out += i.str();
    out += ' ';
}

void print_node(const Formula& f, std::string& out) {
    using Op = Formula::Op;
    switch (f.op()) {
        case Op::Top: out += "true"; return;
        case Op::Bottom: out += "false"; return;
        case Op::Atom: out += f.atom_name(); return;
        case Op::Not:
            out += '!';
            print_operand(f.lhs(), out);
            return;
        case Op::Or:
        case Op::And:
            print_operand(f.lhs(), out);
            out += f.op() == Op::Or ? " | " : " & ";
            print_operand(f.rhs(), out);
            return;
        case Op::Until:
            if (f.lhs() == Formula::top()) {
                out += "F";
                print_interval_suffix(f.interval(), out);
                if (out.back() != ' ') out += ' ';
                print_operand(f.rhs(), out);
                return;
            }
            print_operand(f.lhs(), out);
            out += " U";
            print_interval_suffix(f.interval(), out);
            if (out.back() != ' ') out += ' ';
            print_operand(f.rhs(), out);
            return;
        case Op::Release:
            if (f.lhs() == Formula::bottom()) {
                out += "G";
                print_interval_suffix(f.interval(), out);
                if (out.back() != ' ') out += ' ';
                print_operand(f.rhs(), out);
                return;
            }
            if (f.lhs() == f.rhs() && f.interval() == Interval::greater_than(Rational(0))) {
                out += "N ";
                print_operand(f.rhs(), out);
                return;
            }
            print_operand(f.lhs(), out);
            out += " R";
            print_interval_suffix(f.interval(), out);
            if (out.back() != ' ') out += ' ';
            print_operand(f.rhs(), out);
            return;
    }
}

}  // namespace

std::string Formula::str() const {
    std::string out;
    print_node(*this, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.str(); }

// ---------------------------------------------------------------------------
// Negated normal form and the old-semantics rewriting
// ---------------------------------------------------------------------------

namespace {

Formula nnf_pos(const Formula& f);

Formula nnf_neg(const Formula& f) {
    using Op = Formula::Op;
    switch (f.op()) {
        case Op::Top: return Formula::bottom();
        case Op::Bottom: return Formula::top();
        case Op::Atom: return Formula::negation(f);
        case Op::Not: return nnf_pos(f.lhs());
        case Op::Or: return Formula::conjunction(nnf_neg(f.lhs()), nnf_neg(f.rhs()));
        case Op::And: return Formula::disjunction(nnf_neg(f.lhs()), nnf_neg(f.rhs()));
        case Op::Until: return Formula::release(nnf_neg(f.lhs()), nnf_neg(f.rhs()), f.interval());
        case Op::Release: return Formula::until(nnf_neg(f.lhs()), nnf_neg(f.rhs()), f.interval());
    }
    return f;
}

Formula nnf_pos(const Formula& f) {
    using Op = Formula::Op;
    switch (f.op()) {
        case Op::Top:
        case Op::Bottom:
        case Op::Atom: return f;
        case Op::Not: return nnf_neg(f.lhs());
        case Op::Or: return Formula::disjunction(nnf_pos(f.lhs()), nnf_pos(f.rhs()));
        case Op::And: return Formula::conjunction(nnf_pos(f.lhs()), nnf_pos(f.rhs()));
        case Op::Until: return Formula::until(nnf_pos(f.lhs()), nnf_pos(f.rhs()), f.interval());
        case Op::Release: return Formula::release(nnf_pos(f.lhs()), nnf_pos(f.rhs()), f.interval());
    }
    return f;
}

}  // namespace

Formula Formula::nnf() const { return nnf_pos(*this); }

bool Formula::is_in_nnf() const {
    switch (op()) {
        case Op::Top:
        case Op::Bottom:
        case Op::Atom: return true;
        case Op::Not: return lhs().op() == Op::Atom;
        case Op::Or:
        case Op::And:
        case Op::Until:
        case Op::Release: return lhs().is_in_nnf() && rhs().is_in_nnf();
    }
    return false;
}

namespace {

Formula to_old_rec(const Formula& f, std::unordered_map<const Formula::Node*, Formula>& memo) {
    using Op = Formula::Op;
    if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
    Formula out = f;
    switch (f.op()) {
        case Op::Top:
        case Op::Bottom:
        case Op::Atom: break;
        case Op::Not: out = Formula::negation(to_old_rec(f.lhs(), memo)); break;
        case Op::Or: out = Formula::disjunction(to_old_rec(f.lhs(), memo), to_old_rec(f.rhs(), memo)); break;
        case Op::And: out = Formula::conjunction(to_old_rec(f.lhs(), memo), to_old_rec(f.rhs(), memo)); break;
        case Op::Until:
            out = Formula::until(to_old_rec(f.lhs(), memo), to_old_rec(f.rhs(), memo), f.interval());
            break;
        case Op::Release: {
            const Formula a = to_old_rec(f.lhs(), memo);
            const Formula b = to_old_rec(f.rhs(), memo);
            const Interval& itv = f.interval();
            const Formula plain = Formula::release(a, b, itv);
            const Formula lasting = Formula::release(Formula::op_n(a), b, itv);
            Formula combined = Formula::disjunction(plain, lasting);
            // inf of an empty decoration is +inf, which lands in the first case.
            const bool inf_positive = itv.inf() > TimeBound(Rational(0));
            if (!inf_positive) {
                const bool left_open = itv.inf().is_finite() && !itv.lo_closed();
                if (left_open) {
                    combined = Formula::disjunction(combined, Formula::op_n(a));
                } else {
                    combined = Formula::disjunction(combined, Formula::conjunction(b, Formula::op_n(a)));
                }
            }
            out = combined;
            break;
        }
    }
    memo.emplace(f.node(), out);
    return out;
}

}  // namespace

Formula Formula::to_old() const {
    std::unordered_map<const Node*, Formula> memo;
    return to_old_rec(*this, memo);
}

// ---------------------------------------------------------------------------
// Sizes, atoms, classification
// ---------------------------------------------------------------------------

namespace {

void collect_nodes(const Formula& f, std::unordered_set<const Formula::Node*>& seen) {
    if (!seen.insert(f.node()).second) return;
    switch (f.op()) {
        case Formula::Op::Top:
        case Formula::Op::Bottom:
        case Formula::Op::Atom: return;
        case Formula::Op::Not: collect_nodes(f.lhs(), seen); return;
        default:
            collect_nodes(f.lhs(), seen);
            collect_nodes(f.rhs(), seen);
            return;
    }
}

}  // namespace

std::size_t Formula::subformula_dag_size() const {
    std::unordered_set<const Node*> seen;
    collect_nodes(*this, seen);
    return seen.size();
}

namespace {

std::size_t tree_size_rec(const Formula& f, std::unordered_map<const Formula::Node*, std::size_t>& memo) {
    if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
    std::size_t n = 1;
    switch (f.op()) {
        case Formula::Op::Top:
        case Formula::Op::Bottom:
        case Formula::Op::Atom: break;
        case Formula::Op::Not: n += tree_size_rec(f.lhs(), memo); break;
        default: n += tree_size_rec(f.lhs(), memo) + tree_size_rec(f.rhs(), memo); break;
    }
    memo.emplace(f.node(), n);
    return n;
}

}  // namespace

std::size_t Formula::tree_size() const {
    std::unordered_map<const Node*, std::size_t> memo;
    return tree_size_rec(*this, memo);
}

std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    std::unordered_set<const Node*> seen;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        if (!seen.insert(f.node()).second) return;
        if (f.op() == Op::Atom) {
            out.insert(f.atom_name());
        } else if (f.op() == Op::Not) {
            walk(f.lhs());
        } else if (f.op() != Op::Top && f.op() != Op::Bottom) {
            walk(f.lhs());
            walk(f.rhs());
        }
    };
    walk(*this);
    return out;
}

bool Formula::is_propositional() const {
    switch (op()) {
        case Op::Top:
        case Op::Bottom:
        case Op::Atom: return true;
        case Op::Not: return lhs().is_propositional();
        case Op::Or:
        case Op::And: return lhs().is_propositional() && rhs().is_propositional();
        default: return false;
    }
}

namespace {

std::size_t endpoint_bits(const Interval& i) {
    std::size_t bits = 0;
    for (const TimeBound* b : {&i.lo(), &i.hi()}) {
        if (b->is_finite()) bits += b->finite().bit_size();
    }
    return bits;
}

std::size_t size_bits_rec(const Formula& f, std::unordered_map<const Formula::Node*, std::size_t>& memo) {
    if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
    std::size_t n = 1;
    switch (f.op()) {
        case Formula::Op::Top:
        case Formula::Op::Bottom:
        case Formula::Op::Atom: break;
        case Formula::Op::Not: n += size_bits_rec(f.lhs(), memo); break;
        case Formula::Op::Until:
        case Formula::Op::Release:
            n += endpoint_bits(f.interval());
            [[fallthrough]];
        default: n += size_bits_rec(f.lhs(), memo) + size_bits_rec(f.rhs(), memo); break;
    }
    memo.emplace(f.node(), n);
    return n;
}

void collect_decorations(const Formula& f, std::unordered_set<const Formula::Node*>& seen,
                         std::vector<Interval>& out) {
    if (!seen.insert(f.node()).second) return;
    switch (f.op()) {
        case Formula::Op::Top:
        case Formula::Op::Bottom:
        case Formula::Op::Atom: return;
        case Formula::Op::Not: collect_decorations(f.lhs(), seen, out); return;
        case Formula::Op::Until:
        case Formula::Op::Release: out.push_back(f.interval()); [[fallthrough]];
        default:
            collect_decorations(f.lhs(), seen, out);
            collect_decorations(f.rhs(), seen, out);
            return;
    }
}

}  // namespace

FragmentReport Formula::classify() const {
    FragmentReport report;
    std::unordered_map<const Node*, std::size_t> size_memo;
    report.size_bits = size_bits_rec(*this, size_memo);

    std::unordered_set<const Node*> seen;
    std::vector<Interval> decorations;
    collect_decorations(*this, seen, decorations);

    const TimeBound zero{Rational(0)};
    bool any_singleton = false;
    bool all_zero_or_inf = true;
    bool all_wide = true;
    for (const Interval& i : decorations) {
        if (i.is_singleton()) any_singleton = true;
        const TimeBound lo = i.inf();
        const TimeBound hi = i.sup();
        const bool touches_zero = lo == zero;
        const bool touches_inf = hi.is_pos_inf();
        if (!touches_zero && !touches_inf) all_zero_or_inf = false;
        if (!touches_zero && !touches_inf) {
            if (lo.is_finite() && hi.is_finite() && zero < lo && lo < hi) {
                const Rational ratio = hi.finite() / (hi.finite() - lo.finite());
                if (!report.worst_ratio || *report.worst_ratio < ratio) report.worst_ratio = ratio;
                if (ratio > Rational(static_cast<long>(report.size_bits))) all_wide = false;
            } else {
                all_wide = false;  // empty decorations satisfy none of the shapes
            }
        }
    }
    report.is_mitl = !any_singleton;
    report.is_mitl0inf = report.is_mitl && all_zero_or_inf;
    report.is_mitlwi = report.is_mitl && all_wide;
    return report;
}

namespace {

int temporal_type(const Formula& f) {
    const Interval& i = f.interval();
    const TimeBound zero{Rational(0)};
    const bool inf_zero = i.inf() == zero;
    const bool left_open = i.inf().is_finite() && !i.lo_closed();
    const bool sup_finite = i.sup().is_finite();
    const bool untimed_shape = i == Interval::greater_than(Rational(0));
    if (f.op() == Formula::Op::Until) {
        if (f.lhs() == Formula::top() && left_open && inf_zero && sup_finite) return 1;
        if (i.inf() > zero && sup_finite) return 4;
        if (untimed_shape) return 6;
        return 0;
    }
    if (f.lhs() == Formula::bottom() && left_open && inf_zero && sup_finite) return 2;
    if (f.lhs() == Formula::bottom() && untimed_shape) return 3;
    if (i.inf() > zero && sup_finite) return 5;
    return 0;
}

bool normal_rec(const Formula& f, NormalFormReport& report) {
    using Op = Formula::Op;
    switch (f.op()) {
        case Op::Atom: return true;
        case Op::Not: return f.lhs().op() == Op::Atom;
        case Op::Top:
        case Op::Bottom: return false;
        case Op::Or:
        case Op::And: {
            const bool l = normal_rec(f.lhs(), report);
            const bool r = normal_rec(f.rhs(), report);
            return l && r;
        }
        case Op::Until:
        case Op::Release: {
            const int type = temporal_type(f);
            report.temporal_types.emplace_back(f, type);
            bool ok = type != 0;
            // For the sugared F/G shapes the constant operand is part of the
            // operator, not a subformula to recurse into.
            if (type == 1 || type == 2 || type == 3) {
                ok = normal_rec(f.rhs(), report) && ok;
            } else {
                const bool l = normal_rec(f.lhs(), report);
                const bool r = normal_rec(f.rhs(), report);
                ok = l && r && ok;
            }
            return ok;
        }
    }
    return false;
}

}  // namespace

NormalFormReport Formula::normal_form() const {
    NormalFormReport report;
    report.in_normal_form = normal_rec(*this, report);
    return report;
}

}  // namespace mitl
