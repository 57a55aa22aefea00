// Points and closed arcs on the unit-circumference circle R/Z, with exact
// rational coordinates and the cyclic-order predicates the sweep relies on.
#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "circarc/rational.hpp"

namespace circarc {

// A point of R/Z. The representative is kept in [0, 1) in lowest terms.
class Angle {
public:
    Angle() : v_(0) {}
    explicit Angle(Rational x) : v_(mod_one(x)) {}

    const Rational& value() const { return v_; }

    friend bool operator==(const Angle& a, const Angle& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Angle& a, const Angle& b) { return a.v_ != b.v_; }
    friend bool operator<(const Angle& a, const Angle& b) { return a.v_ < b.v_; }

    // Clockwise distance from a to b, in [0, 1).
    static Rational clockwise_gap(const Angle& a, const Angle& b) {
        return mod_one(b.v_ - a.v_);
    }

private:
    Rational v_;
};

// Closed arc [start, start+length] traversed clockwise. Length 0 is a point
// arc; any length >= 1 canonicalizes to the whole circle (start 0, length 1).
struct Arc {
    Angle start;
    Rational length;  // 0 <= length <= 1 after canonicalization

    static Arc from_start_length(Angle start, const Rational& length);
    // Clockwise from a to b; a == b yields a point arc, never the whole circle.
    static Arc from_endpoints(const Angle& a, const Angle& b);

    bool whole_circle() const { return length == 1; }
    bool point() const { return length == 0; }
    Angle end() const { return Angle(start.value() + length); }
    bool contains(const Angle& p) const;
};

bool intersect(const Arc& a, const Arc& b);

struct ArcCollection {
    std::vector<Arc> arcs;  // index = vertex label

    int size() const { return static_cast<int>(arcs.size()); }
    bool empty() const { return arcs.empty(); }
};

// True when the points occur in weakly clockwise order around the circle
// (x1 <= ... <= xk <= x1); the strict variant rejects equal consecutive points.
bool cyclic_ordered(std::span<const Angle> points, bool strict = false);

// A witness point of the common intersection of the named arcs, or nullopt.
// A nonempty intersection of closed arcs, unless all of them are the whole
// circle, contains the start point of at least one member; each member start
// is tested against all members.
std::optional<Angle> common_point(const ArcCollection& collection, std::span<const int> subset);

// The n evenly-spaced arcs of length k/n, arc i = [i/n, (i+k)/n].
ArcCollection evenly_spaced(int n, int k);

// Closed metric balls: arc i = [p_i - r, p_i + r] (whole circle when 2r >= 1).
ArcCollection balls(std::span<const Angle> points, const Rational& radius);

enum class EventKind { opening = 0, closing = 1 };

// Symbolic perturbation key. Sorting all 2n endpoint events by this key gives
// a strict cyclic order in which, at a coincident position, every opening
// precedes every closing; ties inside a kind break by arc index.
struct EventKey {
    Angle position;
    EventKind kind = EventKind::opening;
    int arc = 0;

    friend bool operator==(const EventKey& a, const EventKey& b) {
        return a.position == b.position && a.kind == b.kind && a.arc == b.arc;
    }
    friend bool operator<(const EventKey& a, const EventKey& b) {
        if (a.position != b.position) return a.position < b.position;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.arc < b.arc;
    }
};

EventKey event_key(const ArcCollection& collection, int arc, EventKind kind);

// All 2n endpoint events in perturbed order.
std::vector<EventKey> sorted_events(const ArcCollection& collection);

// Is x inside the closed cyclic key interval [lo, hi]?
bool key_in_closed(const EventKey& x, const EventKey& lo, const EventKey& hi);
// Is x inside the half-open cyclic key interval (lo, hi]?
bool key_in_left_open(const EventKey& x, const EventKey& lo, const EventKey& hi);

}  // namespace circarc
