#include "gsat/ktype.hpp"

#include <algorithm>

namespace gsat {

Lab pair_label(const KType& t, int i, int j) {
    if (i < 0 || j < 0 || i >= t.k || j >= t.k)
        throw parse_error("pair_label: index out of range");
    if (i == j)
        throw parse_error("pair_label: positions must differ");
    int bi = t.block[i], bj = t.block[j];
    if (bi == bj) return Lab::EQ;
    return t.adjacent(bi, bj) ? Lab::E : Lab::N;
}

KType restrict_ktype(const KType& t, std::span<const int> idx) {
    for (int x : idx)
        if (x < 0 || x >= t.k)
            throw parse_error("restrict_ktype: index out of range");
    return ktype_from_labels(int(idx.size()), [&](int a, int b) {
        if (idx[a] == idx[b]) return Lab::EQ;
        return pair_label(t, idx[a], idx[b]);
    });
}

KType unit_ktype() {
    KType t;
    t.k = 1;
    t.m = 1;
    return t;
}

KType diagonal_ktype(int k) {
    KType t;
    t.k = uint8_t(k);
    t.m = 1;
    return t;
}

std::vector<KType> enumerate_ktypes(int k, bool allow_large) {
    if (k < 1)
        throw parse_error("enumerate_ktypes: arity must be positive");
    int guard = allow_large ? kMaxArity : kDefaultArityGuard;
    if (k > guard)
        throw resource_guard_error(
            "arity " + std::to_string(k) + " exceeds the guard (" + std::to_string(guard) +
            (allow_large ? ")" : "); pass --allow-large-arity to override"));
    if (count_ktypes(k) > 8000000)
        throw resource_guard_error("arity " + std::to_string(k) +
                                   " has too many types to materialize; counting only");

    std::vector<KType> out;
    // restricted-growth strings in lexicographic order
    std::array<uint8_t, kMaxArity> b{};
    auto emit = [&] {
        uint8_t m = uint8_t(*std::max_element(b.begin(), b.begin() + k) + 1);
        int q = pair_count(m);
        for (uint32_t adj = 0; adj < (1u << q); ++adj) {
            KType t;
            t.k = uint8_t(k);
            t.m = m;
            t.block = b;
            t.adj = adj;
            out.push_back(t);
        }
    };
    emit();
    while (true) {
        // next restricted-growth string
        int i = k - 1;
        for (; i > 0; --i) {
            uint8_t maxp = 0;
            for (int j = 0; j < i; ++j) maxp = std::max(maxp, b[j]);
            if (b[i] <= maxp) break;  // can increment position i
        }
        if (i == 0) break;
        b[i]++;
        for (int j = i + 1; j < k; ++j) b[j] = 0;
        emit();
    }
    return out;
}

uint64_t count_ktypes(int k) {
    // Stirling partition numbers S(k,m)
    std::array<std::array<uint64_t, kMaxArity + 1>, kMaxArity + 1> s{};
    s[0][0] = 1;
    for (int n = 1; n <= k; ++n)
        for (int m = 1; m <= n; ++m)
            s[n][m] = s[n - 1][m - 1] + uint64_t(m) * s[n - 1][m];
    uint64_t total = 0;
    for (int m = 1; m <= k; ++m)
        total += s[k][m] << pair_count(m);
    return total;
}

std::string KType::to_string() const {
    std::string s = "<";
    for (int i = 0; i < k; ++i) {
        if (i) s += ',';
        s += std::to_string(int(block[i]));
    }
    s += ";";
    bool first = true;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adjacent(i, j)) {
                if (!first) s += ',';
                first = false;
                s += std::to_string(i) + "-" + std::to_string(j);
            }
    s += ">";
    return s;
}

} // namespace gsat
