#include "mopdom/generators.hpp"

#include "mopdom/error.hpp"

#include <algorithm>
#include <set>

namespace mopdom {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)))
{
}

std::uint64_t CounterRng::next()
{
    return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

std::uint64_t CounterRng::below(std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold)
            return x % bound;
    }
}

MopGraph fan(int k)
{
    if (k < 1)
        throw Error(Errc::BadParameter, "fan needs k >= 1");
    const int n = 3 * k + 1;
    std::vector<Chord> chords;
    for (Vertex i = 2; i <= n - 2; ++i)
        chords.emplace_back(0, i);
    return MopGraph::build(n, chords);
}

MopGraph snake(int n)
{
    if (n < 4)
        throw Error(Errc::BadParameter, "snake needs n >= 4");
    std::vector<Chord> chords;
    Vertex near = 1;
    Vertex far = n - 1;
    for (bool move_far = true; far - near >= 2; move_far = !move_far) {
        chords.emplace_back(near, far);
        if (move_far)
            --far;
        else
            ++near;
    }
    return MopGraph::build(n, chords);
}

bool has_missing_configuration(const MopGraph& g)
{
    const int n = g.n();
    if (n < 5)
        return false;
    auto at = [n](int v) { return ((v % n) + n) % n; };
    auto degree_without_ears = [&](Vertex x) {
        int d = 0;
        for (Vertex y : g.adjacent_to(x))
            d += g.degree(y) != 2 ? 1 : 0;
        return d;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2)
            continue;
        for (int dir : {1, -1}) {
            Vertex u1 = at(v - dir);
            Vertex u = at(v + dir);
            // u0 and u2 are neighbors of u1 and u on the outer cycle of G - {degree-2 vertices}
            Vertex u0 = at(u1 - dir);
            while (g.degree(u0) == 2 && u0 != u1)
                u0 = at(u0 - dir);
            Vertex u2 = at(u + dir);
            while (g.degree(u2) == 2 && u2 != u)
                u2 = at(u2 + dir);
            if (g.degree(u1) == 4 && g.degree(u) != 2 && degree_without_ears(u) == 2 && u0 != u2 && g.adjacent(u0, u2))
                return true;
        }
    }
    return false;
}

std::vector<std::string> fixture_names()
{
    return {"diamond", "triangle", "spider6", "triforce9", "branch124", "aziz_gap"};
}

MopGraph fixture(std::string_view name)
{
    if (name == "diamond")
        return MopGraph::build(4, {{0, 2}});
    if (name == "triangle")
        return MopGraph::build(3, {});
    if (name == "spider6")
        return MopGraph::build(6, {{0, 2}, {2, 4}, {0, 4}});
    if (name == "triforce9")
        return MopGraph::build(9, {{0, 2}, {3, 5}, {6, 8}, {2, 5}, {5, 8}, {2, 8}});
    if (name == "branch124") {
        // internal triangle {0,2,5} carrying branches of length 1, 2 and 4
        return MopGraph::build(10, {{0, 2}, {2, 5}, {0, 5}, {2, 4}, {5, 9}, {5, 8}, {6, 8}});
    }
    if (name == "aziz_gap") {
        auto g = MopGraph::build(6, {{0, 2}, {0, 3}, {3, 5}});
        if (!has_missing_configuration(g))
            throw Error(Errc::UnknownFixture, "aziz_gap fixture lost its configuration");
        return g;
    }
    throw Error(Errc::UnknownFixture, std::string(name));
}

void for_each_triangulation(int n, const std::function<void(const MopGraph&)>& visit, int limit)
{
    if (n < 3 || n > limit)
        throw Error(Errc::BadParameter, "enumeration needs 3 <= n <= " + std::to_string(limit));

    std::vector<std::pair<int, int>> pending{{0, n - 1}};
    std::vector<Chord> chords;
    std::function<void()> rec = [&] {
        if (pending.empty()) {
            visit(MopGraph::build(n, chords));
            return;
        }
        auto [lo, hi] = pending.back();
        pending.pop_back();
        if (hi - lo < 2) {
            rec();
        } else {
            for (int k = lo + 1; k < hi; ++k) {
                const std::size_t mark = chords.size();
                if (k - lo >= 2)
                    chords.emplace_back(lo, k);
                if (hi - k >= 2)
                    chords.emplace_back(k, hi);
                pending.emplace_back(lo, k);
                pending.emplace_back(k, hi);
                rec();
                pending.pop_back();
                pending.pop_back();
                chords.resize(mark);
            }
        }
        pending.emplace_back(lo, hi);
    };
    rec();
}

std::vector<MopGraph> enumerate_all(int n, bool dedup, int limit)
{
    std::vector<MopGraph> out;
    std::set<std::vector<Chord>> seen;
    for_each_triangulation(
        n,
        [&](const MopGraph& g) {
            if (!dedup) {
                out.push_back(g);
                return;
            }
            auto c = canonical_form(g);
            if (seen.insert(c.chords()).second)
                out.push_back(c);
        },
        limit);
    return out;
}

std::uint64_t catalan(int m)
{
    std::vector<std::uint64_t> c(m + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < i; ++j)
            c[i] += c[j] * c[i - 1 - j];
    return c[m];
}

MopGraph random_mop(int n, std::uint64_t seed, std::uint64_t stream)
{
    if (n < 4)
        throw Error(Errc::BadParameter, "random_mop needs n >= 4");
    const int m = n - 2;
    CounterRng rng(seed, stream);

    // m opens (+1) and m+1 closes (-1), shuffled
    std::vector<int> seq(2 * m + 1, -1);
    std::fill(seq.begin(), seq.begin() + m, 1);
    for (int i = static_cast<int>(seq.size()) - 1; i > 0; --i)
        std::swap(seq[i], seq[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    // cycle lemma: rotate to start just after the first minimum prefix sum
    int sum = 0;
    int min_sum = 0;
    int min_at = 0;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        sum += seq[i];
        if (sum < min_sum) {
            min_sum = sum;
            min_at = i + 1;
        }
    }
    std::rotate(seq.begin(), seq.begin() + (min_at % static_cast<int>(seq.size())), seq.end());
    seq.pop_back();  // the trailing close

    std::vector<int> match(seq.size(), -1);
    {
        std::vector<int> stack;
        for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
            if (seq[i] > 0) {
                stack.push_back(i);
            } else {
                match[stack.back()] = i;
                stack.pop_back();
            }
        }
    }

    // word "( A ) B" over polygon [lo, hi]: apex k = lo + 1 + |A|/2
    std::vector<Chord> chords;
    struct Frame {
        int begin, end, lo, hi;
    };
    std::vector<Frame> work{{0, static_cast<int>(seq.size()), 0, n - 1}};
    while (!work.empty()) {
        auto [begin, end, lo, hi] = work.back();
        work.pop_back();
        if (begin == end)
            continue;
        const int close = match[begin];
        const int k = lo + 1 + (close - begin - 1) / 2;
        if (k - lo >= 2)
            chords.emplace_back(lo, k);
        if (hi - k >= 2)
            chords.emplace_back(k, hi);
        work.push_back({begin + 1, close, lo, k});
        work.push_back({close + 1, end, k, hi});
    }
    return MopGraph::build(n, chords);
}

}  // namespace mopdom
