#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flagcodes/reduction.hpp"
#include "flagcodes/search.hpp"

using namespace flagcodes;

namespace {

ReductionVector rv(std::uint32_t v, std::vector<std::uint32_t> r) {
    return ReductionVector(v, FlagType::full(v), std::move(r));
}

ReductionVector rvt(std::uint32_t v, std::vector<std::uint32_t> dims,
                    std::vector<std::uint32_t> r) {
    return ReductionVector(v, FlagType(v, std::move(dims)), std::move(r));
}

std::vector<std::vector<std::uint32_t>> entry_set(const std::vector<ReductionVector>& R) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& r : R) out.push_back(r.entries);
    return out;
}

// Every vector in the box 0 <= r <= m(v,T).
void for_each_box(std::uint32_t v, const FlagType& type,
                  const std::function<void(const ReductionVector&)>& fn) {
    auto m = m_vector(v, type);
    std::vector<std::uint32_t> r(m.size(), 0);
    while (true) {
        fn(ReductionVector(v, type, r));
        std::size_t i = 0;
        while (i < r.size()) {
            if (r[i] < m[i]) {
                ++r[i];
                break;
            }
            r[i] = 0;
            ++i;
        }
        if (i == r.size()) break;
    }
}

}  // namespace

TEST_CASE("worked closures at v=5, full type") {
    CHECK(closure(rv(5, {1, 0, 0, 0})).closed == std::vector<std::uint32_t>{1, 1, 0, 0});
    CHECK(closure(rv(5, {0, 1, 0, 0})).closed == std::vector<std::uint32_t>{0, 1, 0, 0});
    CHECK(closure(rv(5, {1, 1, 0, 0})).closed == std::vector<std::uint32_t>{1, 1, 0, 0});
    CHECK(closure(rv(5, {1, 0, 1, 0})).closed == std::vector<std::uint32_t>{1, 1, 1, 0});
    CHECK(closure(rv(5, {1, 0, 0, 1})).closed == std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK(closure(rv(5, {0, 1, 1, 0})).closed == std::vector<std::uint32_t>{0, 1, 1, 0});
    CHECK(closure(rv(5, {0, 2, 0, 0})).closed == std::vector<std::uint32_t>{0, 2, 1, 0});
}

TEST_CASE("worked closures for type {2,3,4} at v=6") {
    CHECK(closure(rvt(6, {2, 3, 4}, {2, 0, 0})).closed == std::vector<std::uint32_t>{2, 2, 0});
    CHECK(closure(rvt(6, {2, 3, 4}, {0, 3, 0})).closed == std::vector<std::uint32_t>{1, 3, 1});
    CHECK(closure(rvt(6, {2, 3, 4}, {1, 0, 1})).closed == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(closure(rvt(6, {2, 3, 4}, {1, 2, 0})).closed == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("closure of (1,0,1) at v=4") {
    CHECK(closure(rv(4, {1, 0, 1})).closed == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("idempotence and bounds, exhaustively up to v=7") {
    for (std::uint32_t v = 2; v <= 7; ++v) {
        FlagType type = FlagType::full(v);
        auto m = m_vector(v, type);
        for_each_box(v, type, [&](const ReductionVector& r) {
            auto c = closure(r);
            for (std::size_t i = 0; i < m.size(); ++i) {
                REQUIRE(c.closed[i] >= r.entries[i]);
                REQUIRE(c.closed[i] <= m[i]);
            }
            auto c2 = closure(ReductionVector(v, type, c.closed));
            REQUIRE(c2.closed == c.closed);
        });
    }
}

TEST_CASE("monotonicity of closure up to v=7") {
    for (std::uint32_t v = 2; v <= 7; ++v) {
        FlagType type = FlagType::full(v);
        std::vector<std::vector<std::uint32_t>> box, closures;
        for_each_box(v, type, [&](const ReductionVector& r) {
            box.push_back(r.entries);
            closures.push_back(closure(r).closed);
        });
        for (std::size_t a = 0; a < box.size(); ++a) {
            for (std::size_t b = 0; b < box.size(); ++b) {
                bool le = true;
                for (std::size_t i = 0; i < box[a].size(); ++i)
                    if (box[a][i] > box[b][i]) le = false;
                if (!le) continue;
                for (std::size_t i = 0; i < box[a].size(); ++i)
                    REQUIRE(closures[a][i] <= closures[b][i]);
            }
        }
    }
}

TEST_CASE("preceq examples and order axioms") {
    CHECK(preceq(rv(5, {0, 1, 1, 0}), rv(5, {1, 0, 1, 0})));
    CHECK_FALSE(preceq(rv(5, {1, 0, 1, 0}), rv(5, {0, 1, 1, 0})));
    CHECK(preceq(rv(5, {1, 0, 1, 0}), rv(5, {1, 0, 1, 0})));

    // Reflexive, antisymmetric, transitive over the whole box at v=5.
    std::vector<ReductionVector> box;
    for_each_box(5, FlagType::full(5), [&](const ReductionVector& r) { box.push_back(r); });
    for (const auto& a : box) REQUIRE(preceq(a, a));
    for (std::size_t i = 0; i < box.size(); ++i) {
        for (std::size_t j = 0; j < box.size(); ++j) {
            bool ij = preceq(box[i], box[j]);
            if (i != j && ij) REQUIRE_FALSE(preceq(box[j], box[i]));
            if (!ij) continue;
            for (std::size_t k = 0; k < box.size(); ++k)
                if (preceq(box[j], box[k])) REQUIRE(preceq(box[i], box[k]));
        }
    }
}

TEST_CASE("R sets from the published table") {
    using V = std::vector<std::vector<std::uint32_t>>;
    auto R = [&](std::uint32_t v, std::uint32_t d) {
        return entry_set(compute_R(v, d, FlagType::full(v)));
    };
    auto sorted = [](V v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    CHECK(R(5, 1) == sorted({{1, 2, 2, 1}}));
    CHECK(R(5, 2) == sorted({{1, 2, 2, 0}, {1, 2, 0, 1}, {1, 0, 2, 1}, {0, 2, 2, 1}}));
    CHECK(R(5, 3) == sorted({{1, 2, 0, 0},
                             {1, 0, 2, 0},
                             {0, 2, 2, 0},
                             {1, 0, 0, 1},
                             {0, 2, 0, 1},
                             {0, 0, 2, 1}}));
    CHECK(R(5, 4) == sorted({{1, 0, 1, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 1, 0, 1}}));
    CHECK(R(5, 5) == sorted({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}));
    CHECK(R(5, 6) == sorted({{0, 1, 0, 0}, {0, 0, 1, 0}}));

    CHECK(R(6, 1) == sorted({{1, 2, 3, 2, 1}}));
    CHECK(R(6, 2) == sorted({{1, 2, 3, 2, 0},
                             {1, 2, 3, 0, 1},
                             {1, 2, 0, 2, 1},
                             {1, 0, 3, 2, 1},
                             {0, 2, 3, 2, 1}}));
    CHECK(R(6, 3) == sorted({{1, 2, 3, 0, 0},
                             {1, 2, 0, 2, 0},
                             {1, 2, 0, 0, 1},
                             {1, 0, 3, 2, 0},
                             {1, 0, 3, 0, 1},
                             {1, 0, 0, 2, 1},
                             {0, 2, 3, 2, 0},
                             {0, 2, 3, 0, 1},
                             {0, 2, 0, 2, 1},
                             {0, 0, 3, 2, 1}}));
    CHECK(R(6, 4) == sorted({{1, 2, 0, 1, 0},
                             {1, 0, 3, 0, 0},
                             {1, 0, 2, 0, 1},
                             {1, 0, 0, 2, 0},
                             {0, 2, 3, 0, 0},
                             {0, 2, 0, 2, 0},
                             {0, 2, 0, 0, 1},
                             {0, 1, 0, 2, 1},
                             {0, 0, 3, 2, 0},
                             {0, 0, 3, 0, 1}}));
    CHECK(R(6, 5) == sorted({{1, 2, 0, 0, 0},
                             {1, 0, 2, 1, 0},
                             {1, 0, 0, 0, 1},
                             {0, 2, 0, 1, 0},
                             {0, 1, 2, 0, 1},
                             {0, 1, 0, 2, 0},
                             {0, 0, 3, 0, 0},
                             {0, 0, 0, 2, 1}}));
    CHECK(R(6, 6) == sorted({{1, 0, 2, 0, 0},
                             {1, 0, 0, 1, 0},
                             {0, 2, 0, 0, 0},
                             {0, 1, 2, 1, 0},
                             {0, 1, 0, 0, 1},
                             {0, 0, 2, 0, 1},
                             {0, 0, 0, 2, 0}}));
    CHECK(R(6, 7) == sorted({{1, 0, 0, 0, 0},
                             {0, 1, 2, 0, 0},
                             {0, 1, 0, 1, 0},
                             {0, 0, 2, 1, 0},
                             {0, 0, 0, 0, 1}}));
    CHECK(R(6, 8) == sorted({{0, 1, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 1, 0}}));
    CHECK(R(6, 9) == sorted({{0, 0, 1, 0, 0}}));
}

TEST_CASE("R sets are closed under reversal for the full type") {
    for (std::uint32_t v = 4; v <= 6; ++v) {
        std::uint32_t dmax = (v * v) / 4;
        for (std::uint32_t d = 1; d <= dmax; ++d) {
            auto R = entry_set(compute_R(v, d, FlagType::full(v)));
            std::set<std::vector<std::uint32_t>> set(R.begin(), R.end());
            for (auto r : R) {
                std::reverse(r.begin(), r.end());
                REQUIRE(set.count(r));
            }
        }
    }
}

TEST_CASE("distance argument validation") {
    CHECK_THROWS_AS(compute_R(5, 0, FlagType::full(5)), InvalidDistance);
    CHECK_THROWS_AS(compute_R(5, 7, FlagType::full(5)), InvalidDistance);
    CHECK_THROWS_AS(rv(5, {2, 0, 0, 0}), InvalidRange);
}

TEST_CASE("empty clique families are detected") {
    // The published example of an empty family at v=8.
    CHECK_FALSE(family_nonempty(rv(8, {0, 0, 0, 4, 1, 0, 0})));
    CHECK(family_nonempty(rv(5, {1, 2, 2, 0})));
}

namespace {

// Edge set covered by the clique family of r, as a bitset over flag pairs.
std::vector<std::uint64_t> covered_edges(std::uint32_t v, const ReductionVector& r,
                                         const std::vector<Flag>& flags) {
    std::size_t n = flags.size();
    std::vector<std::uint64_t> bits((n * n + 63) / 64, 0);
    std::uint32_t dmax = 0;
    for (auto m : m_vector(v, r.type)) dmax += m;
    CliqueFamily fam = generate_clique_family(v, 2, dmax, r.type, r, flags);
    for (const auto& members : fam.members) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                std::size_t key = std::size_t(members[i]) * n + members[j];
                bits[key >> 6] |= std::uint64_t(1) << (key & 63);
            }
        }
    }
    return bits;
}

}  // namespace

TEST_CASE("closure preserves the covered edge set (oracle, q=2, v=4..5)") {
    Field F = make_field(2);
    for (std::uint32_t v : {4u, 5u}) {
        FlagType type = FlagType::full(v);
        auto flags = enumerate_flags(v, F, type);
        std::size_t checked = 0;
        for_each_box(v, type, [&](const ReductionVector& r) {
            auto c = closure(r).closed;
            if (c == r.entries) return;  // trivially equal edge sets
            if (!family_nonempty(r)) return;
            ReductionVector rbar(v, type, c);
            REQUIRE(family_nonempty(rbar));
            REQUIRE(covered_edges(v, r, flags) == covered_edges(v, rbar, flags));
            ++checked;
        });
        CHECK(checked > 0);
    }
}
