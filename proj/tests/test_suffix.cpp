#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "holz/sais.hpp"
#include "holz/static_wavelet.hpp"
#include "holz/suffix_index.hpp"
#include "holz/text.hpp"

using namespace holz;

namespace {

// Suffix order of seq plus the implicit smallest-sorting end sentinel:
// positions 0..n, where n is the empty suffix.
std::vector<uint32_t> naive_sa(const std::vector<uint32_t>& seq) {
    std::vector<uint32_t> sa(seq.size() + 1);
    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(), [&](uint32_t a, uint32_t b) {
        return std::lexicographical_compare(seq.begin() + a, seq.end(), seq.begin() + b,
                                            seq.end());
    });
    return sa;
}

uint64_t naive_common_prefix(const std::vector<uint32_t>& seq, size_t i, size_t j) {
    uint64_t h = 0;
    while (i + h < seq.size() && j + h < seq.size() && seq[i + h] == seq[j + h]) {
        ++h;
    }
    return h;
}

std::vector<uint32_t> random_seq(std::mt19937& rng, size_t n, uint32_t sigma) {
    std::uniform_int_distribution<uint32_t> sym(0, sigma - 1);
    std::vector<uint32_t> seq(n);
    for (auto& s : seq) {
        s = sym(rng);
    }
    return seq;
}

} // namespace

TEST_CASE("suffix array matches the naive sort on fixed and random inputs") {
    const std::vector<uint32_t> baaba = {1, 0, 0, 1, 0};
    CHECK(SuffixIndex::build(baaba, 2).sa() == std::vector<uint32_t>{5, 4, 1, 2, 3, 0});

    std::vector<std::vector<uint32_t>> fixed = {
        {},
        {0},
        {0, 0, 0, 0},
        baaba,
    };
    std::vector<uint32_t> alt(32);
    for (size_t i = 0; i < alt.size(); ++i) {
        alt[i] = i % 2;
    }
    fixed.push_back(alt);
    for (const auto& seq : fixed) {
        uint32_t sigma = seq.empty() ? 1 : *std::max_element(seq.begin(), seq.end()) + 1;
        CHECK(SuffixIndex::build(seq, sigma).sa() == naive_sa(seq));
        std::vector<uint32_t> pure = naive_sa(seq);
        pure.erase(pure.begin()); // drop the sentinel entry
        CHECK(suffix_array(seq, sigma) == pure);
    }

    std::mt19937 rng(0x5af1);
    for (uint32_t sigma : {1u, 2u, 4u, 256u}) {
        for (int it = 0; it < 40; ++it) {
            size_t n = std::uniform_int_distribution<size_t>(0, 512)(rng);
            auto seq = random_seq(rng, n, sigma);
            CHECK(SuffixIndex::build(seq, sigma).sa() == naive_sa(seq));
        }
    }
}

TEST_CASE("isa inverts sa and lcp equals direct common-prefix lengths") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        uint32_t sigma = std::uniform_int_distribution<uint32_t>(1, 4)(rng);
        size_t n = std::uniform_int_distribution<size_t>(0, 256)(rng);
        auto seq = random_seq(rng, n, sigma);
        SuffixIndex idx = SuffixIndex::build(seq, sigma, /*with_lce=*/it % 2 == 0);
        REQUIRE(idx.size() == n + 1);
        for (size_t r = 0; r < idx.size(); ++r) {
            REQUIRE(idx.isa()[idx.sa()[r]] == r);
        }
        CHECK(idx.lcp()[0] == 0);
        for (size_t r = 1; r < idx.size(); ++r) {
            REQUIRE(idx.lcp()[r] == naive_common_prefix(seq, idx.sa()[r - 1], idx.sa()[r]));
        }
    }
}

TEST_CASE("lce equals character-by-character comparison") {
    std::mt19937 rng(11);
    for (auto [n, sigma] : {std::pair<size_t, uint32_t>{512, 4}, {300, 2}, {64, 1}}) {
        auto seq = random_seq(rng, n, sigma);
        SuffixIndex idx = SuffixIndex::build(seq, sigma);
        REQUIRE(idx.has_lce());
        std::uniform_int_distribution<size_t> pos(0, n); // includes the sentinel position
        size_t bad = 0;
        for (int q = 0; q < 40000; ++q) {
            size_t i = pos(rng);
            size_t j = pos(rng);
            uint64_t want = i == j ? n - i : naive_common_prefix(seq, i, j);
            bad += idx.lce(i, j) != want;
        }
        CHECK(bad == 0);
        CHECK(idx.lce(0, 0) == n);
        CHECK(idx.lce(n, n) == 0);
    }
}

TEST_CASE("psv and nsv follow the value-comparison definition") {
    constexpr uint32_t none = PsvNsv::kNone;

    // Distinct ascending symbols: sa = sentinel then 0,1,2,3.
    PsvNsv up = build_psv_nsv(SuffixIndex::build({0, 1, 2, 3}, 4));
    CHECK(up.psv == std::vector<uint32_t>{none, none, 1, 2, 3});
    CHECK(up.nsv == std::vector<uint32_t>{1, none, none, none, none});

    // Distinct descending symbols: sa = 4,3,2,1,0, so nsv[i] = i+1.
    PsvNsv down = build_psv_nsv(SuffixIndex::build({3, 2, 1, 0}, 4));
    CHECK(down.nsv == std::vector<uint32_t>{1, 2, 3, 4, none});
    CHECK(down.psv == std::vector<uint32_t>(5, none));

    std::mt19937 rng(13);
    for (int it = 0; it < 40; ++it) {
        uint32_t sigma = std::uniform_int_distribution<uint32_t>(1, 8)(rng);
        size_t n = std::uniform_int_distribution<size_t>(0, 512)(rng);
        auto seq = random_seq(rng, n, sigma);
        SuffixIndex idx = SuffixIndex::build(seq, sigma, /*with_lce=*/false);
        PsvNsv got = build_psv_nsv(idx);
        const auto& sa = idx.sa();
        for (size_t i = 0; i < sa.size(); ++i) {
            uint32_t psv = none;
            for (size_t j = i; j-- > 0;) {
                if (sa[j] < sa[i]) {
                    psv = static_cast<uint32_t>(j);
                    break;
                }
            }
            uint32_t nsv = none;
            for (size_t j = i + 1; j < sa.size(); ++j) {
                if (sa[j] < sa[i]) {
                    nsv = static_cast<uint32_t>(j);
                    break;
                }
            }
            REQUIRE(got.psv[i] == psv);
            REQUIRE(got.nsv[i] == nsv);
        }
    }
}

TEST_CASE("bwt run counts match direct construction") {
    Text aaaa{{0, 0, 0, 0}, 1, {}};
    BwtRuns got = static_bwt_runs(aaaa);
    CHECK(got.bwt == std::vector<uint32_t>{0, 0, 0, 0, 1}); // terminator shows as sigma
    CHECK(got.runs == 2);

    for (size_t n = 1; n <= 64; n *= 2) {
        Text mono{std::vector<uint32_t>(n, 0), 1, {}};
        CHECK(static_bwt_runs(mono).runs <= 2);
    }

    std::mt19937 rng(17);
    for (int it = 0; it < 60; ++it) {
        uint32_t sigma = std::uniform_int_distribution<uint32_t>(1, 6)(rng);
        size_t n = std::uniform_int_distribution<size_t>(0, 300)(rng);
        Text text{random_seq(rng, n, sigma), sigma, {}};

        std::vector<uint32_t> sa = naive_sa(text.symbols);
        std::vector<uint32_t> bwt;
        uint64_t runs = 0;
        for (size_t r = 0; r < sa.size(); ++r) {
            bwt.push_back(sa[r] == 0 ? sigma : text.symbols[sa[r] - 1]);
            runs += r == 0 || bwt[r] != bwt[r - 1];
        }
        BwtRuns out = static_bwt_runs(text);
        REQUIRE(out.bwt == bwt);
        REQUIRE(out.runs == runs);
    }
}

TEST_CASE("bit vector rank and select agree with prefix counts") {
    std::mt19937 rng(19);
    for (size_t n : {size_t{0}, size_t{1}, size_t{63}, size_t{64}, size_t{65}, size_t{513},
                     size_t{4096}, size_t{5000}}) {
        for (double density : {0.0, 0.5, 1.0}) {
            std::bernoulli_distribution flip(density);
            std::vector<bool> bits(n);
            for (size_t i = 0; i < n; ++i) {
                bits[i] = flip(rng);
            }
            StaticBitRank bv(bits);
            REQUIRE(bv.size() == n);
            size_t ones = 0;
            size_t bad = 0;
            for (size_t i = 0; i < n; ++i) {
                bad += bv.get(i) != bits[i];
                bad += bv.rank1(i) != ones;
                bad += bv.rank0(i) != i - ones;
                if (bits[i]) {
                    ++ones;
                    bad += bv.select(true, ones) != i;
                } else {
                    bad += bv.select(false, i + 1 - ones) != i;
                }
            }
            bad += bv.rank1(n) != ones;
            CHECK(bad == 0);
        }
    }
}

TEST_CASE("wavelet range queries equal linear scans") {
    std::mt19937 rng(23);

    auto exercise = [&](const std::vector<uint64_t>& values, uint64_t vmax, int queries) {
        StaticWaveletMatrix wt(values);
        REQUIRE(wt.size() == values.size());
        for (size_t i = 0; i < values.size(); ++i) {
            REQUIRE(wt.access(i) == values[i]);
        }
        std::uniform_int_distribution<size_t> pos(0, values.size() - 1);
        std::uniform_int_distribution<uint64_t> val(0, vmax + 2);
        size_t bad = 0;
        for (int q = 0; q < queries; ++q) {
            size_t lo = pos(rng);
            size_t hi = pos(rng);
            if (lo > hi) {
                std::swap(lo, hi);
            }
            uint64_t v = val(rng);

            bool has_pred = false, has_succ = false;
            uint64_t pred = 0, succ = 0;
            for (size_t i = lo; i <= hi; ++i) {
                if (values[i] < v && (!has_pred || values[i] > pred)) {
                    has_pred = true;
                    pred = values[i];
                }
                if (values[i] > v && (!has_succ || values[i] < succ)) {
                    has_succ = true;
                    succ = values[i];
                }
            }
            auto p = wt_range_pred(wt, lo, hi, v);
            auto s = wt_range_succ(wt, lo, hi, v);
            bad += p.has_value() != has_pred;
            bad += s.has_value() != has_succ;
            if (p && has_pred) {
                bad += p->value != pred;
                bad += p->index < lo || p->index > hi || values[p->index] != p->value;
            }
            if (s && has_succ) {
                bad += s->value != succ;
                bad += s->index < lo || s->index > hi || values[s->index] != s->value;
            }
        }
        CHECK(bad == 0);
    };

    exercise({42}, 42, 200);
    exercise(std::vector<uint64_t>(50, 7), 7, 2000);
    for (auto [n, vmax] : {std::pair<size_t, uint64_t>{7, 1},
                           {100, 255},
                           {1000, uint64_t{1} << 31},
                           {1000, 9}}) {
        std::uniform_int_distribution<uint64_t> val(0, vmax);
        std::vector<uint64_t> values(n);
        for (auto& v : values) {
            v = val(rng);
        }
        exercise(values, vmax, 25000);
    }

    // Nothing below the minimum, nothing above the maximum.
    StaticWaveletMatrix wt(std::vector<uint64_t>{5, 9, 5, 7});
    CHECK(!wt_range_pred(wt, 0, 3, 5).has_value());
    CHECK(!wt_range_succ(wt, 0, 3, 9).has_value());
    CHECK(wt_range_pred(wt, 0, 3, 6)->value == 5);
    CHECK(wt_range_succ(wt, 0, 3, 5)->value == 7);
}
