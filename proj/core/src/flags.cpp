#include "flagcodes/flags.hpp"

#include <algorithm>
#include <thread>

#include "flagcodes/errors.hpp"

namespace flagcodes {

FlagType::FlagType(std::uint32_t v, std::vector<std::uint32_t> ks) : ambient(v), dims(std::move(ks)) {
    if (dims.empty()) throw InvalidRange("flag type must be nonempty");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1 || dims[i] > v - 1) throw InvalidRange("flag type dimension out of range");
        if (i && dims[i] <= dims[i - 1]) throw InvalidRange("flag type must be strictly increasing");
    }
}

FlagType FlagType::full(std::uint32_t v) {
    std::vector<std::uint32_t> ks(v - 1);
    for (std::uint32_t i = 0; i + 1 < v; ++i) ks[i] = i + 1;
    return FlagType(v, std::move(ks));
}

FlagType FlagType::dual_type() const {
    std::vector<std::uint32_t> ks;
    for (auto it = dims.rbegin(); it != dims.rend(); ++it) ks.push_back(ambient - *it);
    return FlagType(ambient, std::move(ks));
}

Flag::Flag(FlagType t, std::vector<Subspace> p) : type(std::move(t)), parts(std::move(p)) {
    if (parts.size() != type.dims.size()) throw ShapeMismatch("flag part count mismatch");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].dim() != type.dims[i]) throw ShapeMismatch("flag part dimension mismatch");
        if (i && !is_subspace_of(parts[i - 1], parts[i]))
            throw ShapeMismatch("flag parts are not nested");
    }
}

std::vector<std::uint32_t> m_vector(std::uint32_t v, const FlagType& type) {
    std::vector<std::uint32_t> m;
    m.reserve(type.dims.size());
    for (auto k : type.dims) m.push_back(std::min(k, v - k));
    return m;
}

std::size_t grassmann_distance(const Flag& a, const Flag& b) {
    if (a.type != b.type) throw TypeMismatch("flags have different types");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        d += a.type.dims[i] - intersection_dim(a.parts[i], b.parts[i]);
    return d;
}

namespace {

void extend_flag(std::uint32_t v, const Field& field, const FlagType& type,
                 std::vector<Subspace>& parts, const std::function<void(const Flag&)>& fn) {
    std::size_t layer = parts.size();
    if (layer == type.dims.size()) {
        fn(Flag(type, parts));
        return;
    }
    auto visit = [&](const Subspace& s) {
        parts.push_back(s);
        extend_flag(v, field, type, parts, fn);
        parts.pop_back();
    };
    if (layer == 0) {
        for_each_subspace(field, v, type.dims[0], visit);
    } else {
        for_each_between(parts.back(), nullptr, type.dims[layer], visit);
    }
}

}  // namespace

void for_each_flag(std::uint32_t v, const Field& field, const FlagType& type,
                   const std::function<void(const Flag&)>& fn) {
    std::vector<Subspace> parts;
    parts.reserve(type.dims.size());
    extend_flag(v, field, type, parts, fn);
}

std::vector<Flag> enumerate_flags(std::uint32_t v, const Field& field, const FlagType& type) {
    std::vector<Flag> out;
    for_each_flag(v, field, type, [&](const Flag& f) { out.push_back(f); });
    return out;
}

Flag dual_flag(const Flag& a) {
    std::vector<Subspace> parts;
    for (auto it = a.parts.rbegin(); it != a.parts.rend(); ++it) parts.push_back(dual(*it));
    return Flag(a.type.dual_type(), std::move(parts));
}

namespace {

MinDistanceResult pair_sweep(std::size_t n,
                             const std::function<std::size_t(std::size_t, std::size_t)>& dist) {
    MinDistanceResult best;
    if (n < 2) {
        best.infinite = true;
        return best;
    }
    auto better = [](const MinDistanceResult& a, const MinDistanceResult& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.witness_i != b.witness_i) return a.witness_i < b.witness_i;
        return a.witness_j < b.witness_j;
    };
    auto sweep_range = [&](std::size_t i_begin, std::size_t i_end) {
        MinDistanceResult local;
        local.distance = SIZE_MAX;
        for (std::size_t i = i_begin; i < i_end; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                std::size_t d = dist(i, j);
                MinDistanceResult cand{false, d, i, j};
                if (better(cand, local)) local = cand;
            }
        }
        return local;
    };

    std::size_t pairs = n * (n - 1) / 2;
    unsigned workers = std::thread::hardware_concurrency();
    if (pairs < 200000 || workers < 2) return sweep_range(0, n);

    workers = std::min<unsigned>(workers, 8);
    std::vector<MinDistanceResult> results(workers);
    std::vector<std::thread> threads;
    // Balance by splitting the triangular loop on i so each chunk holds a
    // similar pair count.
    std::vector<std::size_t> cuts(workers + 1, 0);
    std::size_t acc = 0, w = 1;
    for (std::size_t i = 0; i < n && w < workers; ++i) {
        acc += n - 1 - i;
        if (acc >= pairs * w / workers) cuts[w++] = i + 1;
    }
    for (; w <= workers; ++w) cuts[w] = n;
    for (unsigned t = 0; t < workers; ++t)
        threads.emplace_back([&, t] { results[t] = sweep_range(cuts[t], cuts[t + 1]); });
    for (auto& th : threads) th.join();
    MinDistanceResult bestr = results[0];
    for (unsigned t = 1; t < workers; ++t)
        if (better(results[t], bestr)) bestr = results[t];
    return bestr;
}

}  // namespace

MinDistanceResult min_distance(const FlagCode& code) {
    const auto& words = code.words;
    return pair_sweep(words.size(), [&](std::size_t i, std::size_t j) {
        return grassmann_distance(words[i], words[j]);
    });
}

MinDistanceResult min_distance_tuples(const std::vector<std::vector<Subspace>>& words) {
    return pair_sweep(words.size(), [&](std::size_t i, std::size_t j) {
        std::size_t d = 0;
        for (std::size_t t = 0; t < words[i].size(); ++t)
            d += words[i][t].dim() - intersection_dim(words[i][t], words[j][t]);
        return d;
    });
}

}  // namespace flagcodes
