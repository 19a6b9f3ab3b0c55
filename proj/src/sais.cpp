#include "holz/sais.hpp"

#include <limits>

namespace holz {

namespace {

constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();

// Bucket start (or end) offsets per symbol for the induced-sorting scans.
void fill_buckets(const uint32_t* s, size_t n, uint32_t sigma, std::vector<uint32_t>& bkt,
                  bool ends) {
    bkt.assign(sigma, 0);
    for (size_t i = 0; i < n; ++i) {
        ++bkt[s[i]];
    }
    uint32_t sum = 0;
    for (uint32_t c = 0; c < sigma; ++c) {
        sum += bkt[c];
        bkt[c] = ends ? sum : sum - bkt[c];
    }
}

void induce(const uint32_t* s, uint32_t* sa, size_t n, uint32_t sigma,
            const std::vector<bool>& is_s, std::vector<uint32_t>& bkt) {
    // L-type pass, left to right from bucket heads.
    fill_buckets(s, n, sigma, bkt, false);
    for (size_t i = 0; i < n; ++i) {
        uint32_t j = sa[i];
        if (j != kEmpty && j > 0 && !is_s[j - 1]) {
            sa[bkt[s[j - 1]]++] = j - 1;
        }
    }
    // S-type pass, right to left from bucket ends.
    fill_buckets(s, n, sigma, bkt, true);
    for (size_t i = n; i-- > 0;) {
        uint32_t j = sa[i];
        if (j != kEmpty && j > 0 && is_s[j - 1]) {
            sa[--bkt[s[j - 1]]] = j - 1;
        }
    }
}

// Core SA-IS over a sequence whose last symbol is the unique smallest.
void sais(const uint32_t* s, uint32_t* sa, size_t n, uint32_t sigma) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> is_s(n);
    is_s[n - 1] = true;
    for (size_t i = n - 1; i-- > 0;) {
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    }
    auto is_lms = [&](size_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    std::vector<uint32_t> bkt;

    // Step 1: rough sort — drop LMS positions at their bucket ends, induce.
    std::fill(sa, sa + n, kEmpty);
    fill_buckets(s, n, sigma, bkt, true);
    for (size_t i = 1; i < n; ++i) {
        if (is_lms(i)) {
            sa[--bkt[s[i]]] = static_cast<uint32_t>(i);
        }
    }
    induce(s, sa, n, sigma, is_s, bkt);

    // Step 2: name the LMS substrings in their induced order.
    std::vector<uint32_t> lms_order;
    for (size_t i = 0; i < n; ++i) {
        if (sa[i] != kEmpty && is_lms(sa[i])) {
            lms_order.push_back(sa[i]);
        }
    }
    size_t num_lms = lms_order.size();
    std::vector<uint32_t> name_of(n, kEmpty);
    uint32_t names = 0;
    uint32_t prev = kEmpty;
    for (uint32_t pos : lms_order) {
        bool same = false;
        if (prev != kEmpty) {
            same = true;
            for (size_t d = 0;; ++d) {
                bool end_a = d > 0 && is_lms(prev + d);
                bool end_b = d > 0 && is_lms(pos + d);
                if (end_a != end_b || s[prev + d] != s[pos + d]) {
                    same = false;
                    break;
                }
                if (end_a && end_b) {
                    break;
                }
            }
        }
        if (!same) {
            ++names;
        }
        name_of[pos] = names - 1;
        prev = pos;
    }

    // LMS positions in text order, and their reduced string.
    std::vector<uint32_t> lms_pos;
    lms_pos.reserve(num_lms);
    for (size_t i = 1; i < n; ++i) {
        if (is_lms(i)) {
            lms_pos.push_back(static_cast<uint32_t>(i));
        }
    }
    std::vector<uint32_t> reduced(num_lms);
    for (size_t i = 0; i < num_lms; ++i) {
        reduced[i] = name_of[lms_pos[i]];
    }

    // Step 3: order the LMS suffixes, recursing only if names collide.
    std::vector<uint32_t> lms_sa(num_lms);
    if (names == num_lms) {
        for (size_t i = 0; i < num_lms; ++i) {
            lms_sa[reduced[i]] = static_cast<uint32_t>(i);
        }
    } else {
        sais(reduced.data(), lms_sa.data(), num_lms, names);
    }

    // Step 4: final induce from the exactly-sorted LMS suffixes.
    std::fill(sa, sa + n, kEmpty);
    fill_buckets(s, n, sigma, bkt, true);
    for (size_t i = num_lms; i-- > 0;) {
        uint32_t pos = lms_pos[lms_sa[i]];
        sa[--bkt[s[pos]]] = pos;
    }
    induce(s, sa, n, sigma, is_s, bkt);
}

} // namespace

std::vector<uint32_t> suffix_array(const std::vector<uint32_t>& seq, uint32_t sigma) {
    size_t n = seq.size();
    if (n == 0) {
        return {};
    }
    // Shift symbols up one and append the unique smallest sentinel SA-IS needs;
    // its suffix sorts first and is dropped from the result.
    std::vector<uint32_t> s(n + 1);
    for (size_t i = 0; i < n; ++i) {
        s[i] = seq[i] + 1;
    }
    s[n] = 0;
    std::vector<uint32_t> sa(n + 1);
    sais(s.data(), sa.data(), n + 1, sigma + 1);
    return {sa.begin() + 1, sa.end()};
}

} // namespace holz
