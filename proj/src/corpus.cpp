#include "pedlab/corpus.hpp"

#include <algorithm>
#include <functional>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

void collect_partitions(int remaining, std::vector<int>& parts, std::vector<Partition>& out) {
    out.push_back(Partition(parts));
    for (int next = std::min(remaining, parts.empty() ? remaining : parts.back()); next >= 1;
         --next) {
        parts.push_back(next);
        collect_partitions(remaining - next, parts, out);
        parts.pop_back();
    }
}

bool partition_order(const Partition& a, const Partition& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.parts() < b.parts();
}

/// Uniform value in [0, n) from the raw generator; avoids distribution
/// classes so streams are identical across standard libraries.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::vector<Partition> all_partitions(int max_total) {
    std::vector<Partition> out;
    std::vector<int> parts;
    collect_partitions(max_total, parts, out);
    std::sort(out.begin(), out.end(), partition_order);
    return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int)> extend = [&](int row) {
        out.push_back(Partition(parts));
        if (row > lambda.rows()) return;
        const int cap = std::min(lambda.part(row), row == 1 ? lambda.part(1) : parts.back());
        for (int next = 1; next <= cap; ++next) {
            parts.push_back(next);
            extend(row + 1);
            parts.pop_back();
        }
    };
    extend(1);
    std::sort(out.begin(), out.end(), partition_order);
    return out;
}

std::vector<SkewShape> all_skew_shapes(int max_outer) {
    std::vector<SkewShape> out;
    for (const Partition& lambda : all_partitions(max_outer))
        for (const Partition& mu : sub_partitions(lambda)) out.push_back(SkewShape(lambda, mu));
    return out;
}

std::vector<NamedPoset> named_posets() {
    std::vector<NamedPoset> out;
    auto add = [&](const std::string& name, const std::vector<std::string>& labels,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
        out.push_back({name, Poset::from_covers(labels, covers)});
    };
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> labels;
        std::vector<std::pair<std::string, std::string>> covers;
        for (int i = 1; i <= n; ++i) labels.push_back("c" + std::to_string(i));
        for (int i = 1; i < n; ++i)
            covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
        add("chain-" + std::to_string(n), labels, covers);
    }
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
        add("antichain-" + std::to_string(n), labels, {});
    }
    add("vee", {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    add("wedge", {"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    add("diamond", {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    add("n-poset", {"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
    add("fence-4", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "b"}, {"c", "d"}});
    add("two-chains", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    add("grid-2x3", {"a", "b", "c", "d", "e", "f"},
        {{"a", "b"}, {"b", "c"}, {"a", "d"}, {"b", "e"}, {"c", "f"}, {"d", "e"}, {"e", "f"}});
    add("crown-s32", {"a", "b", "c", "d", "e"},
        {{"a", "d"}, {"a", "e"}, {"b", "d"}, {"b", "e"}, {"c", "d"}, {"c", "e"}});
    return out;
}

Poset random_poset(std::mt19937_64& rng, int max_elements) {
    if (max_elements < 2) throw std::invalid_argument("need room for at least 2 elements");
    const int n = 2 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_elements - 1)));
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pick(rng, 3) == 0) covers.emplace_back(labels[static_cast<size_t>(a)], labels[static_cast<size_t>(b)]);
    return Poset::from_covers(labels, covers);
}

Filter random_filter(std::mt19937_64& rng, const Poset& p) {
    const int n = p.size();
    Filter f;
    if (n == 0) return f;
    const std::vector<LinearExtension> exts = linear_extensions(p);
    const LinearExtension& ext = exts[static_cast<size_t>(pick(rng, exts.size()))];
    const int k = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n)));
    // Weakly increasing surjective floor word along the extension: place k-1
    // strict increases among the n-1 gaps.
    std::vector<int> gaps;
    for (int g = 0; g < n - 1; ++g) gaps.push_back(g);
    for (int s = 0; s < k - 1; ++s) {
        const size_t at = pick(rng, gaps.size());
        gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(at));
    }
    std::vector<char> rises(static_cast<size_t>(n), 0);
    for (int g = 0; g < n - 1; ++g)
        if (std::find(gaps.begin(), gaps.end(), g) == gaps.end()) rises[static_cast<size_t>(g + 1)] = 1;
    f.floor.assign(static_cast<size_t>(n), 0);
    const std::vector<int> by_rank = ext.elements_by_rank();
    int floor = 1;
    for (int r = 0; r < n; ++r) {
        if (rises[static_cast<size_t>(r)]) ++floor;
        f.floor[static_cast<size_t>(by_rank[static_cast<size_t>(r)])] = floor;
    }
    f.k = k;
    if (!filter_valid(p, f)) throw InternalInvariantViolation("random filter construction broke");
    return f;
}

std::vector<NamedPoset> random_posets(std::uint64_t seed, int count, int max_elements) {
    std::vector<NamedPoset> out;
    std::mt19937_64 rng(seed);
    for (int i = 1; i <= count; ++i)
        out.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(i),
                       random_poset(rng, max_elements)});
    return out;
}

}  // namespace pedlab
