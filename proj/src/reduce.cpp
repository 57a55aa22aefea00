#include "circarc/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

namespace circarc {

char lemma_case_letter(LemmaCase c) {
    switch (c) {
        case LemmaCase::a: return 'a';
        case LemmaCase::b: return 'b';
        case LemmaCase::c: return 'c';
    }
    return '?';
}

namespace {

int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Double approximations carry absolute error well under 1e-12 for values in
// [0, 3]; differences above this margin are decided without exact arithmetic.
constexpr double kApproxMargin = 1e-9;

// Relative position of x on the key circle cut just before `origin`.
struct RelKey {
    bool wrapped;
    const EventKey* key;
    friend bool operator<(const RelKey& a, const RelKey& b) {
        if (a.wrapped != b.wrapped) return !a.wrapped;
        return *a.key < *b.key;
    }
};

RelKey rel(const EventKey& origin, const EventKey& x) {
    return RelKey{!(origin < x), &x};
}

// Strict cyclic order origin -> p -> q -> r of four distinct keys.
bool cyclic4(const EventKey& origin, const EventKey& p, const EventKey& q, const EventKey& r) {
    return rel(origin, p) < rel(origin, q) && rel(origin, q) < rel(origin, r);
}

bool exact_contained(const Arc& inner, const Arc& outer) {
    if (outer.whole_circle()) return true;
    if (inner.whole_circle()) return false;
    return Angle::clockwise_gap(outer.start, inner.start) + inner.length <= outer.length;
}

bool case_holds(const ArcCollection& u, std::span<const char> alive, int i, int j,
                LemmaCase how) {
    const Arc& ai = u.arcs[i];
    const Arc& aj = u.arcs[j];
    if (how == LemmaCase::a) return exact_contained(ai, aj);
    if (ai.whole_circle() || aj.whole_circle()) return false;

    EventKey oi = event_key(u, i, EventKind::opening);
    EventKey oj = event_key(u, j, EventKind::opening);
    EventKey ci = event_key(u, i, EventKind::closing);
    EventKey cj = event_key(u, j, EventKind::closing);

    if (how == LemmaCase::b) {
        if (!cyclic4(oi, oj, ci, cj)) return false;
        for (int k = 0; k < u.size(); ++k) {
            if (!alive[k]) continue;
            if (key_in_closed(event_key(u, k, EventKind::closing), oi, oj)) return false;
        }
        return true;
    }
    // case (c)
    if (!cyclic4(oj, oi, cj, ci)) return false;
    for (int k = 0; k < u.size(); ++k) {
        if (!alive[k]) continue;
        if (key_in_left_open(event_key(u, k, EventKind::opening), cj, ci)) return false;
    }
    return true;
}

struct ContainmentOutcome {
    std::vector<char> removed;
    std::vector<Removal> log;
};

// Running coverage maximum over arcs in (start, length desc, index) order.
// The exact unwrapped reach start + round + length is materialized only when
// the double approximation cannot decide a comparison.
struct CoverageMax {
    bool valid = false;
    double approx = 0;
    int arc = -1;
    int round = 0;

    Rational exact(const ArcCollection& u) const {
        return u.arcs[arc].start.value() + round + u.arcs[arc].length;
    }

    // Does the maximum reach at least start(idx) + round + length(idx)?
    bool covers(const ArcCollection& u, std::span<const double> start_approx,
                std::span<const double> len_approx, int idx, int r) const {
        if (!valid) return false;
        double candidate = start_approx[idx] + r + len_approx[idx];
        if (approx > candidate + kApproxMargin) return true;
        if (approx < candidate - kApproxMargin) return false;
        return exact(u) >= u.arcs[idx].start.value() + r + u.arcs[idx].length;
    }

    void offer(const ArcCollection& u, std::span<const double> start_approx,
               std::span<const double> len_approx, int idx, int r) {
        double candidate = start_approx[idx] + r + len_approx[idx];
        if (!valid || candidate > approx + kApproxMargin) {
            valid = true;
            approx = candidate;
            arc = idx;
            round = r;
            return;
        }
        if (candidate < approx - kApproxMargin) return;
        if (u.arcs[idx].start.value() + r + u.arcs[idx].length > exact(u)) {
            approx = candidate;
            arc = idx;
            round = r;
        }
    }
};

ContainmentOutcome analyze_containment(const ArcCollection& u, std::span<const int> order,
                                       std::span<const double> start_approx,
                                       std::span<const double> len_approx) {
    const int n = u.size();
    ContainmentOutcome out;
    out.removed.assign(n, 0);

    int lowest_whole = -1;
    for (int i = 0; i < n; ++i)
        if (u.arcs[i].whole_circle()) {
            lowest_whole = i;
            break;
        }
    if (lowest_whole >= 0) {
        // The whole circle absorbs everything else.
        for (int i = 0; i < n; ++i) {
            if (i == lowest_whole) continue;
            out.removed[i] = 1;
            out.log.push_back({i, lowest_whole, LemmaCase::a});
        }
        return out;
    }

    // Detection pass: an arc is contained iff an arc processed earlier in the
    // unwrapped order reaches at least as far; two rounds cover the wrap.
    CoverageMax cover;
    for (int round = 0; round < 2; ++round)
        for (int idx : order) {
            if (cover.covers(u, start_approx, len_approx, idx, round)) out.removed[idx] = 1;
            cover.offer(u, start_approx, len_approx, idx, round);
        }

    // Dominator pass over the survivors only, so the log cites live arcs.
    std::vector<char> logged(n, 0);
    cover = CoverageMax{};
    for (int round = 0; round < 2; ++round)
        for (int idx : order) {
            if (out.removed[idx]) {
                if (!logged[idx] && cover.covers(u, start_approx, len_approx, idx, round)) {
                    logged[idx] = 1;
                    out.log.push_back({idx, cover.arc, LemmaCase::a});
                }
                continue;
            }
            cover.offer(u, start_approx, len_approx, idx, round);
        }
    for (int i = 0; i < n; ++i)
        CIRCARC_CHECK(!out.removed[i] || logged[i], "contained arc lacks a surviving dominator");
    return out;
}

}  // namespace

std::optional<LemmaCase> domination_case(const ArcCollection& u, std::span<const char> alive,
                                         int i, int j) {
    if (i < 0 || j < 0 || i >= u.size() || j >= u.size() || i == j)
        throw std::invalid_argument("domination_case: bad indices");
    for (LemmaCase c : {LemmaCase::a, LemmaCase::b, LemmaCase::c})
        if (case_holds(u, alive, i, j, c)) return c;
    return std::nullopt;
}

std::optional<LemmaCase> lemma_domination_case(const ArcCollection& u, int i, int j) {
    std::vector<char> alive(u.size(), 1);
    return domination_case(u, alive, i, j);
}

namespace {

std::vector<int> start_order_of(const ArcCollection& u, std::span<const double> start_approx,
                                std::span<const double> len_approx) {
    std::vector<int> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double da = start_approx[a], db = start_approx[b];
        if (da < db - kApproxMargin) return true;
        if (da > db + kApproxMargin) return false;
        if (u.arcs[a].start != u.arcs[b].start) return u.arcs[a].start < u.arcs[b].start;
        double la = len_approx[a], lb = len_approx[b];
        if (la > lb + kApproxMargin) return true;
        if (la < lb - kApproxMargin) return false;
        if (u.arcs[a].length != u.arcs[b].length) return u.arcs[a].length > u.arcs[b].length;
        return a < b;
    });
    return order;
}

}  // namespace

std::vector<int> remove_contained(const ArcCollection& u) {
    const int n = u.size();
    std::vector<double> start_approx(n), len_approx(n);
    for (int i = 0; i < n; ++i) {
        start_approx[i] = u.arcs[i].start.value().convert_to<double>();
        len_approx[i] = u.arcs[i].length.convert_to<double>();
    }
    std::vector<int> order = start_order_of(u, start_approx, len_approx);
    ContainmentOutcome res = analyze_containment(u, order, start_approx, len_approx);
    std::vector<int> kept;
    for (int i = 0; i < n; ++i)
        if (!res.removed[i]) kept.push_back(i);
    return kept;
}

ReductionResult reduce_to_minimal(const ArcCollection& u, ReduceStats* stats) {
    if (u.empty()) throw std::invalid_argument("reduce_to_minimal: empty collection");
    const int n = u.size();
    ReduceStats local;
    ReduceStats* st = stats ? stats : &local;
    *st = ReduceStats{};

    std::vector<double> start_approx(n), len_approx(n);
    for (int i = 0; i < n; ++i) {
        start_approx[i] = u.arcs[i].start.value().convert_to<double>();
        len_approx[i] = u.arcs[i].length.convert_to<double>();
    }

    int64_t t0 = now_ns();
    std::vector<int> start_order = start_order_of(u, start_approx, len_approx);
    st->sort_ns += now_ns() - t0;

    t0 = now_ns();
    ContainmentOutcome contain = analyze_containment(u, start_order, start_approx, len_approx);
    std::vector<int> survivors;
    for (int i = 0; i < n; ++i)
        if (!contain.removed[i]) survivors.push_back(i);
    const int m = static_cast<int>(survivors.size());

    // Perturbed endpoint events of the survivors: id 2r opening, 2r+1 closing.
    std::vector<Rational> pos(2 * m);
    std::vector<double> pos_approx(2 * m);
    std::vector<char> is_open(2 * m);
    for (int r = 0; r < m; ++r) {
        const Arc& a = u.arcs[survivors[r]];
        pos[2 * r] = a.start.value();
        pos[2 * r + 1] = a.end().value();
        pos_approx[2 * r] = start_approx[survivors[r]];
        pos_approx[2 * r + 1] = pos[2 * r + 1].convert_to<double>();
        is_open[2 * r] = 1;
        is_open[2 * r + 1] = 0;
    }
    std::vector<int> sorted_ids(2 * m);
    std::iota(sorted_ids.begin(), sorted_ids.end(), 0);
    st->scan_ns += now_ns() - t0;

    t0 = now_ns();
    std::sort(sorted_ids.begin(), sorted_ids.end(), [&](int a, int b) {
        double da = pos_approx[a], db = pos_approx[b];
        if (da < db - kApproxMargin) return true;
        if (da > db + kApproxMargin) return false;
        if (pos[a] != pos[b]) return pos[a] < pos[b];
        if (is_open[a] != is_open[b]) return is_open[a] > is_open[b];
        return survivors[a / 2] < survivors[b / 2];
    });
    st->sort_ns += now_ns() - t0;

    t0 = now_ns();
    std::vector<int32_t> nxt(2 * m), prv(2 * m);
    std::vector<char> alive(2 * m, 1);
    for (int i = 0; i < 2 * m; ++i) {
        int a = sorted_ids[i];
        int b = sorted_ids[(i + 1) % (2 * m)];
        nxt[a] = b;
        prv[b] = a;
    }
    auto unlink = [&](int e) {
        alive[e] = 0;
        nxt[prv[e]] = nxt[e];
        prv[nxt[e]] = prv[e];
        ++st->mutations;
    };

    // Worklist of survivor ranks whose opening is immediately followed by
    // another opening; ranks are in original-index order, so the set pops the
    // lowest original index first.
    std::set<int> work;
    std::vector<char> in_work(m, 0);
    auto push = [&](int rank) {
        if (!in_work[rank]) {
            in_work[rank] = 1;
            work.insert(rank);
            ++st->mutations;
        }
    };
    if (m > 1)
        for (int r = 0; r < m; ++r)
            if (is_open[nxt[2 * r]]) push(r);

    while (!work.empty()) {
        int r = *work.begin();
        work.erase(work.begin());
        ++st->mutations;
        in_work[r] = 0;
        int open_e = 2 * r, close_e = 2 * r + 1;
        CIRCARC_CHECK(alive[open_e], "worklist entry already deleted");
        int succ = nxt[open_e];
        CIRCARC_CHECK(is_open[succ], "worklist successor is not an opening");
        contain.log.push_back({survivors[r], survivors[succ / 2], LemmaCase::b});
        unlink(open_e);
        int p = prv[close_e];
        int q = nxt[close_e];
        unlink(close_e);
        if (is_open[p] && is_open[q]) push(p / 2);
    }
    CIRCARC_CHECK(st->mutations <= 8 * static_cast<int64_t>(n),
                  "post-sort mutation budget exceeded");

    // Survivor ranks in cyclic start order, smallest perturbed key first.
    std::vector<int> final_ranks;
    for (int id : sorted_ids)
        if (alive[id] && is_open[id]) final_ranks.push_back(id / 2);
    const int np = static_cast<int>(final_ranks.size());
    CIRCARC_CHECK(np >= 1, "reduction lost every arc");

    std::vector<int> label(m, -1);
    for (int s = 0; s < np; ++s) label[final_ranks[s]] = s;

    int kp = 0;
    for (int s = 0; s < np; ++s) {
        int succ = nxt[2 * final_ranks[s]];
        CIRCARC_CHECK(!is_open[succ], "final event list does not alternate");
        int t = label[succ / 2];
        CIRCARC_CHECK(t >= 0, "closing of a removed arc survived");
        int offset = ((s - t) % np + np) % np;
        if (s == 0) kp = offset;
        CIRCARC_CHECK(kp == offset, "window offset differs between survivors");
    }

    ReductionResult out;
    out.n_prime = np;
    out.k_prime = kp;
    out.kept.reserve(np);
    for (int r : final_ranks) out.kept.push_back(survivors[r]);
    out.log = std::move(contain.log);
    st->scan_ns += now_ns() - t0;
    return out;
}

bool verify_reduction(const ArcCollection& u, const ReductionResult& result) {
    const int n = u.size();
    std::vector<char> alive(n, 1);
    for (const Removal& rm : result.log) {
        if (rm.removed < 0 || rm.removed >= n || rm.dominator < 0 || rm.dominator >= n)
            return false;
        if (rm.removed == rm.dominator || !alive[rm.removed] || !alive[rm.dominator])
            return false;
        if (!case_holds(u, alive, rm.removed, rm.dominator, rm.how)) return false;
        alive[rm.removed] = 0;
    }

    std::vector<int> survivors;
    for (int i = 0; i < n; ++i)
        if (alive[i]) survivors.push_back(i);
    std::vector<int> kept_sorted = result.kept;
    std::sort(kept_sorted.begin(), kept_sorted.end());
    if (survivors != kept_sorted) return false;
    if (static_cast<int>(survivors.size()) != result.n_prime) return false;

    const int m = static_cast<int>(survivors.size());
    if (m == 1) return result.k_prime == 0 && result.kept == survivors;

    std::vector<EventKey> keys(2 * m);
    for (int r = 0; r < m; ++r) {
        keys[2 * r] = EventKey{u.arcs[survivors[r]].start, EventKind::opening, survivors[r]};
        keys[2 * r + 1] = EventKey{u.arcs[survivors[r]].end(), EventKind::closing, survivors[r]};
    }
    std::vector<int> ids(2 * m);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return keys[a] < keys[b]; });

    std::vector<int> order;
    for (int id : ids)
        if (id % 2 == 0) order.push_back(id / 2);
    std::vector<int> expected_kept;
    for (int r : order) expected_kept.push_back(survivors[r]);
    if (expected_kept != result.kept) return false;

    std::vector<int> label(m, -1);
    for (int s = 0; s < m; ++s) label[order[s]] = s;
    int kp = -1;
    for (int i = 0; i < 2 * m; ++i) {
        int cur = ids[i];
        int nxt_id = ids[(i + 1) % (2 * m)];
        if (cur % 2 != 0) continue;
        if (nxt_id % 2 == 0) return false;  // two openings adjacent
        int s = label[cur / 2];
        int t = label[nxt_id / 2];
        int offset = ((s - t) % m + m) % m;
        if (kp < 0) kp = offset;
        if (kp != offset) return false;
    }
    return kp == result.k_prime;
}

}  // namespace circarc
