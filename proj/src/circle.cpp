#include "circarc/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace circarc {

Arc Arc::from_start_length(Angle start, const Rational& length) {
    if (length < 0) throw std::invalid_argument("arc length must be nonnegative");
    if (length >= 1) return Arc{Angle(Rational(0)), Rational(1)};
    return Arc{start, length};
}

Arc Arc::from_endpoints(const Angle& a, const Angle& b) {
    return Arc{a, Angle::clockwise_gap(a, b)};
}

bool Arc::contains(const Angle& p) const {
    if (whole_circle()) return true;
    return Angle::clockwise_gap(start, p) <= length;
}

bool intersect(const Arc& a, const Arc& b) {
    return a.contains(b.start) || b.contains(a.start);
}

bool cyclic_ordered(std::span<const Angle> points, bool strict) {
    if (points.size() < 2) throw std::invalid_argument("cyclic_ordered needs at least 2 points");
    Rational winding = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        const Angle& cur = points[i];
        const Angle& nxt = points[(i + 1) % points.size()];
        if (strict && cur == nxt) return false;
        winding += Angle::clockwise_gap(cur, nxt);
    }
    // winding is a whole number of turns; ordered means at most one.
    return strict ? winding == 1 : winding <= 1;
}

std::optional<Angle> common_point(const ArcCollection& collection, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("common_point: empty subset");
    for (int i : subset)
        if (i < 0 || i >= collection.size())
            throw std::out_of_range("common_point: arc index out of range");

    for (int i : subset) {
        const Angle& candidate = collection.arcs[i].start;
        bool inside_all = true;
        for (int j : subset) {
            if (!collection.arcs[j].contains(candidate)) {
                inside_all = false;
                break;
            }
        }
        if (inside_all) return candidate;
    }
    return std::nullopt;
}

ArcCollection evenly_spaced(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("evenly_spaced: need 0 <= k < n");
    ArcCollection out;
    out.arcs.reserve(n);
    for (int i = 0; i < n; ++i)
        out.arcs.push_back(Arc::from_start_length(Angle(Rational(i, n)), Rational(k, n)));
    return out;
}

ArcCollection balls(std::span<const Angle> points, const Rational& radius) {
    if (points.empty()) throw std::invalid_argument("balls: no points");
    if (radius < 0) throw std::invalid_argument("balls: negative radius");
    ArcCollection out;
    out.arcs.reserve(points.size());
    for (const Angle& p : points)
        out.arcs.push_back(Arc::from_start_length(Angle(p.value() - radius), 2 * radius));
    return out;
}

EventKey event_key(const ArcCollection& collection, int arc, EventKind kind) {
    const Arc& a = collection.arcs.at(arc);
    return EventKey{kind == EventKind::opening ? a.start : a.end(), kind, arc};
}

std::vector<EventKey> sorted_events(const ArcCollection& collection) {
    std::vector<EventKey> events;
    events.reserve(2 * collection.arcs.size());
    for (int i = 0; i < collection.size(); ++i) {
        events.push_back(event_key(collection, i, EventKind::opening));
        events.push_back(event_key(collection, i, EventKind::closing));
    }
    std::sort(events.begin(), events.end());
    return events;
}

bool key_in_closed(const EventKey& x, const EventKey& lo, const EventKey& hi) {
    if (lo < hi || lo == hi) return !(x < lo) && !(hi < x);
    return !(x < lo) || !(hi < x);  // wrapping interval
}

bool key_in_left_open(const EventKey& x, const EventKey& lo, const EventKey& hi) {
    return !(x == lo) && key_in_closed(x, lo, hi);
}

}  // namespace circarc
