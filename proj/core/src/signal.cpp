#include "mitl/signal.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mitl {

Signal Signal::validate(std::vector<Segment> raw) {
    std::erase_if(raw, [](const Segment& s) { return s.first.is_empty(); });
    if (raw.empty()) {
        throw SignalError(SignalError::Kind::NotCoveringZero, "signal has no segments");
    }
    for (const Segment& s : raw) {
        if (s.first.lo() < TimeBound(Rational(0))) {
            throw SignalError(SignalError::Kind::NegativeTime,
                              "segment " + s.first.str() + " extends below time 0");
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Segment& a, const Segment& b) {
        if (a.first.lo() != b.first.lo()) return a.first.lo() < b.first.lo();
        return a.first.lo_closed() && !b.first.lo_closed();
    });

    const Segment& first = raw.front();
    if (!first.first.contains(Rational(0))) {
        throw SignalError(SignalError::Kind::NotCoveringZero,
                          "first segment " + first.first.str() + " does not contain time 0");
    }

    for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
        const Interval& cur = raw[k].first;
        const Interval& nxt = raw[k + 1].first;
        if (cur.hi() > nxt.lo()) {
            throw SignalError(SignalError::Kind::Overlap,
                              "segments " + cur.str() + " and " + nxt.str() + " overlap");
        }
        if (cur.hi() == nxt.lo()) {
            if (cur.hi_closed() && nxt.lo_closed()) {
                // A shared boundary point is tolerated when both segments
                // assign it the same value.
                if (raw[k].second != raw[k + 1].second) {
                    throw SignalError(SignalError::Kind::Overlap,
                                      "segments disagree at time " + cur.hi().str());
                }
            } else if (!cur.hi_closed() && !nxt.lo_closed()) {
                throw SignalError(SignalError::Kind::Gap,
                                  "no segment covers time " + cur.hi().str());
            }
        } else {
            throw SignalError(SignalError::Kind::Gap,
                              "gap between " + cur.str() + " and " + nxt.str());
        }
    }
    if (!raw.back().first.hi().is_pos_inf()) {
        throw SignalError(SignalError::Kind::MissingTail,
                          "last segment " + raw.back().first.str() + " does not extend to inf");
    }

    Signal out;
    for (Segment& s : raw) {
        if (!out.segments_.empty() && out.segments_.back().second == s.second &&
            out.segments_.back().first.mergeable_with(s.first)) {
            out.segments_.back().first = out.segments_.back().first.merge(s.first);
        } else {
            out.segments_.push_back(std::move(s));
        }
    }
    return out;
}

Signal Signal::constant(std::set<std::string> props) {
    return validate({{Interval::nonneg(), std::move(props)}});
}

const std::set<std::string>& Signal::value_at(const Rational& t) const {
    if (t.is_negative()) {
        throw SignalError(SignalError::Kind::NegativeTime, "value_at: negative time " + t.str());
    }
    for (const Segment& s : segments_) {
        if (s.first.contains(t)) return s.second;
    }
    throw SignalError(SignalError::Kind::Malformed, "no segment contains time " + t.str());
}

Signal Signal::shift(const Rational& r) const {
    if (r.is_negative()) {
        throw SignalError(SignalError::Kind::NegativeTime, "shift: negative amount " + r.str());
    }
    std::vector<Segment> out;
    const Interval tail = Interval::at_least(r);
    for (const Segment& s : segments_) {
        Interval clipped = s.first.intersect(tail);
        if (clipped.is_empty()) continue;
        out.emplace_back(clipped.shift(-r), s.second);
    }
    return validate(std::move(out));
}

IntervalSet Signal::atom_truth_set(const std::string& p) const {
    std::vector<Interval> where;
    for (const Segment& s : segments_) {
        if (s.second.count(p)) where.push_back(s.first);
    }
    return IntervalSet::of(std::move(where));
}

std::set<std::string> Signal::props() const {
    std::set<std::string> out;
    for (const Segment& s : segments_) out.insert(s.second.begin(), s.second.end());
    return out;
}

std::vector<Rational> Signal::breakpoints() const {
    std::vector<Rational> out;
    for (const Segment& s : segments_) {
        if (s.first.lo().is_finite()) out.push_back(s.first.lo().finite());
        if (s.first.hi().is_finite()) out.push_back(s.first.hi().finite());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Signal::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (k) os << ", ";
        os << "(" << segments_[k].first << ", {";
        bool comma = false;
        for (const std::string& p : segments_[k].second) {
            if (comma) os << ",";
            os << p;
            comma = true;
        }
        os << "})";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Signal& s) { return os << s.str(); }

Signal Signal::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SignalError(SignalError::Kind::Malformed, std::string("signal JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw SignalError(SignalError::Kind::Malformed, "signal JSON must be an array of segments");
    }
    std::vector<Segment> raw;
    for (const auto& seg : doc) {
        if (!seg.is_object() || !seg.contains("interval") || !seg.contains("props")) {
            throw SignalError(SignalError::Kind::Malformed,
                              "each segment needs an \"interval\" string and a \"props\" array");
        }
        Interval itv;
        try {
            itv = Interval::parse(seg.at("interval").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SignalError(SignalError::Kind::Malformed, e.what());
        }
        std::set<std::string> props;
        for (const auto& p : seg.at("props")) props.insert(p.get<std::string>());
        raw.emplace_back(itv, std::move(props));
    }
    return validate(std::move(raw));
}

std::string Signal::to_json_text(bool pretty) const {
    nlohmann::json doc = nlohmann::json::array();
    for (const Segment& s : segments_) {
        nlohmann::json seg;
        seg["interval"] = s.first.str();
        seg["props"] = nlohmann::json::array();
        for (const std::string& p : s.second) seg["props"].push_back(p);
        doc.push_back(std::move(seg));
    }
    return pretty ? doc.dump(2) : doc.dump();
}

}  // namespace mitl
