#include "poramsey/coloring_search.hpp"

#include "poramsey/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace poramsey {

const char * to_string(Verdict v)
{
    return v == Verdict::witness_holds ? "witness-holds" : "counterexample";
}

void check_feasible(const ColoringProblem & problem, int colors, const SearchLimits & limits)
{
    if (colors < 1)
        throw PreconditionError("number of colors must be positive");
    if (problem.objects > limits.max_objects)
        throw InfeasibleError("colored domain has " + std::to_string(problem.objects) + " objects, ceiling is " + std::to_string(limits.max_objects));
    if (colors == 1)
        return;
    BigInt nominal = 1;
    for (std::size_t i = 0; i < problem.objects; ++i) {
        nominal *= colors;
        if (nominal > limits.max_colorings)
            throw InfeasibleError(std::to_string(colors) + "^" + std::to_string(problem.objects) + " colorings exceed the ceiling of " + limits.max_colorings.str());
    }
}

namespace
{
    constexpr int unset = -1;
    constexpr int mixed = -2;

    class Searcher {
    public:
        Searcher(const ColoringProblem & problem, int colors, bool symmetry) :
            problem_(problem),
            colors_(colors),
            symmetry_(symmetry),
            membership_(problem.objects),
            colored_(problem.cones.size(), 0),
            cone_color_(problem.cones.size(), unset),
            coloring_(problem.objects, unset)
        {
            for (std::size_t c = 0; c < problem.cones.size(); ++c)
                for (auto o : problem.cones[c])
                    membership_[o].push_back(c);
        }

        // Assign a prefix; false if it already completes a monochromatic cone.
        bool apply_prefix(std::span<const int> prefix)
        {
            for (std::size_t o = 0; o < prefix.size(); ++o)
                if (! assign(o, prefix[o]))
                    return false;
            return true;
        }

        bool search(std::size_t depth, int used)
        {
            if (depth == problem_.objects)
                return true;
            const int top = symmetry_ ? std::min(colors_ - 1, used) : colors_ - 1;
            for (int c = 0; c <= top; ++c) {
                if (assign(depth, c)) {
                    if (search(depth + 1, std::max(used, c + 1)))
                        return true;
                }
                unassign(depth);
            }
            return false;
        }

        const std::vector<int> & coloring() const { return coloring_; }

    private:
        // Colors object o; on conflict the partial update is still recorded so unassign undoes it.
        bool assign(std::size_t o, int c)
        {
            coloring_[o] = c;
            bool ok = true;
            auto & log = undo_.emplace_back();
            for (auto cone : membership_[o]) {
                log.emplace_back(cone, cone_color_[cone]);
                ++colored_[cone];
                if (cone_color_[cone] == unset)
                    cone_color_[cone] = c;
                else if (cone_color_[cone] != c)
                    cone_color_[cone] = mixed;
                if (cone_color_[cone] != mixed && colored_[cone] == problem_.cones[cone].size())
                    ok = false;
            }
            return ok;
        }

        void unassign(std::size_t o)
        {
            auto & log = undo_.back();
            for (auto it = log.rbegin(); it != log.rend(); ++it) {
                --colored_[it->first];
                cone_color_[it->first] = it->second;
            }
            undo_.pop_back();
            coloring_[o] = unset;
        }

        const ColoringProblem & problem_;
        int colors_;
        bool symmetry_;
        std::vector<std::vector<std::size_t>> membership_;
        std::vector<std::size_t> colored_;
        std::vector<int> cone_color_;
        std::vector<int> coloring_;
        std::vector<std::vector<std::pair<std::size_t, int>>> undo_;
    };

    // All colorings of the first `depth` objects, lexicographically, honoring symmetry breaking.
    std::vector<std::vector<int>> prefixes(std::size_t depth, int colors, bool symmetry)
    {
        std::vector<std::vector<int>> out;
        std::vector<int> current;
        auto grow = [&](auto && self, int used) -> void {
            if (current.size() == depth) {
                out.push_back(current);
                return;
            }
            const int top = symmetry ? std::min(colors - 1, used) : colors - 1;
            for (int c = 0; c <= top; ++c) {
                current.push_back(c);
                self(self, std::max(used, c + 1));
                current.pop_back();
            }
        };
        grow(grow, 0);
        return out;
    }

    ColoringCertificate make_certificate(const ColoringProblem & problem, int colors, std::optional<std::vector<int>> coloring)
    {
        ColoringCertificate cert;
        cert.colors = colors;
        cert.objects = problem.objects;
        cert.targets = problem.cones.size();
        cert.verdict = coloring ? Verdict::counterexample : Verdict::witness_holds;
        cert.coloring = std::move(coloring);
        return cert;
    }
}

ColoringCertificate search_colorings(const ColoringProblem & problem, int colors, const SearchLimits & limits)
{
    check_feasible(problem, colors, limits);

    // An empty cone is monochromatic under every coloring.
    for (const auto & cone : problem.cones)
        if (cone.empty())
            return make_certificate(problem, colors, std::nullopt);

    const int jobs = std::max(1, limits.jobs);
    std::size_t depth = 0;
    if (jobs > 1) {
        std::size_t count = 1;
        while (depth < problem.objects && count < static_cast<std::size_t>(jobs) * 8) {
            ++depth;
            count *= static_cast<std::size_t>(colors);
        }
    }
    const auto work = prefixes(depth, colors, limits.symmetry_breaking);

    // Workers take prefixes in order; the lowest prefix holding a bad coloring wins.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<std::vector<int>>> found(work.size());

    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= work.size() || idx > best.load())
                return;
            Searcher s(problem, colors, limits.symmetry_breaking);
            if (! s.apply_prefix(work[idx]))
                continue;
            int used = 0;
            for (int c : work[idx])
                used = std::max(used, c + 1);
            if (s.search(work[idx].size(), used)) {
                found[idx] = s.coloring();
                std::size_t current = best.load();
                while (idx < current && ! best.compare_exchange_weak(current, idx)) {
                }
            }
        }
    };

    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }

    const std::size_t winner = best.load();
    if (winner == std::numeric_limits<std::size_t>::max())
        return make_certificate(problem, colors, std::nullopt);
    return make_certificate(problem, colors, found[winner]);
}

ColoringCertificate search_colorings_naive(const ColoringProblem & problem, int colors, const SearchLimits & limits)
{
    check_feasible(problem, colors, limits);
    std::vector<int> coloring(problem.objects, 0);
    while (true) {
        if (! find_monochromatic_cone(problem, coloring))
            return make_certificate(problem, colors, coloring);
        std::size_t i = problem.objects;
        while (i > 0 && coloring[i - 1] == colors - 1)
            coloring[--i] = 0;
        if (i == 0)
            return make_certificate(problem, colors, std::nullopt);
        ++coloring[i - 1];
    }
}

std::optional<std::size_t> find_monochromatic_cone(const ColoringProblem & problem, std::span<const int> coloring)
{
    for (std::size_t c = 0; c < problem.cones.size(); ++c) {
        const auto & cone = problem.cones[c];
        bool mono = true;
        for (std::size_t j = 1; j < cone.size() && mono; ++j)
            mono = coloring[cone[j]] == coloring[cone[0]];
        if (mono)
            return c;
    }
    return std::nullopt;
}

} // namespace poramsey
