#include "privword/border.hpp"

#include <algorithm>
#include <stdexcept>

namespace privword {

std::vector<std::uint32_t> border_array(std::span<const Symbol> u) {
    const std::size_t n = u.size();
    std::vector<std::uint32_t> ba(n, 0);
    std::uint32_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && u[i] != u[k]) k = ba[k - 1];
        if (u[i] == u[k]) ++k;
        ba[i] = k;
    }
    return ba;
}

std::vector<std::uint32_t> border_array(const Word& u) {
    return border_array(u.span());
}

std::vector<std::uint32_t> z_array(std::span<const Symbol> u) {
    const std::size_t n = u.size();
    std::vector<std::uint32_t> z(n, 0);
    if (n == 0) return z;
    z[0] = static_cast<std::uint32_t>(n);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t zi = 0;
        if (i < r) zi = std::min(r - i, static_cast<std::size_t>(z[i - l]));
        while (i + zi < n && u[zi] == u[i + zi]) ++zi;
        z[i] = static_cast<std::uint32_t>(zi);
        if (i + zi > r) { l = i; r = i + zi; }
    }
    return z;
}

std::uint64_t count_occurrences(std::span<const Symbol> w,
                                std::span<const Symbol> u) {
    if (w.empty()) throw std::invalid_argument("count_occurrences: empty pattern");
    const std::size_t m = w.size();
    if (u.size() < m) return 0;
    // KMP scan over u with the pattern's failure function.
    const auto ba = border_array(w);
    std::uint64_t count = 0;
    std::uint32_t k = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        while (k > 0 && u[i] != w[k]) k = ba[k - 1];
        if (u[i] == w[k]) ++k;
        if (k == m) {
            ++count;
            k = ba[k - 1];
        }
    }
    return count;
}

std::uint64_t count_occurrences(const Word& w, const Word& u) {
    return count_occurrences(w.span(), u.span());
}

std::optional<Word> maximal_border(const Word& u) {
    if (u.size() <= 1) return std::nullopt;
    const auto ba = border_array(u.span());
    const std::uint32_t m = ba.back();
    if (m == 0) return std::nullopt;
    return u.prefix(m);
}

namespace detail {

std::uint64_t prefix_occurrences(std::span<const std::uint32_t> z,
                                 std::uint32_t m, std::uint32_t len) {
    // Position 0 is always an occurrence; z[i] >= m and i + m <= len marks
    // the others.
    std::uint64_t count = 1;
    for (std::uint32_t i = 1; i + m <= len; ++i)
        if (z[i] >= m) ++count;
    return count;
}

Classifier::Result Classifier::classify(std::span<const Symbol> u) {
    const std::size_t n = u.size();
    if (n <= 1) return {false, true, 0};

    ba.assign(n, 0);
    std::uint32_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && u[i] != u[k]) k = ba[k - 1];
        if (u[i] == u[k]) ++k;
        ba[i] = k;
    }
    const std::uint32_t maxb = ba[n - 1];
    if (maxb == 0) return {false, false, 0};

    z.assign(n, 0);
    z[0] = static_cast<std::uint32_t>(n);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t zi = 0;
        if (i < r) zi = std::min(r - i, static_cast<std::size_t>(z[i - l]));
        while (i + zi < n && u[zi] == u[i + zi]) ++zi;
        z[i] = static_cast<std::uint32_t>(zi);
        if (i + zi > r) { l = i; r = i + zi; }
    }

    const bool closed =
        prefix_occurrences(z, maxb, static_cast<std::uint32_t>(n)) == 2;

    // Privilege: walk the border chain; the occurrence test at each level is
    // confined to the prefix under inspection.
    bool privileged = true;
    std::uint32_t len = static_cast<std::uint32_t>(n);
    while (len > 1) {
        const std::uint32_t m = ba[len - 1];
        if (m == 0 || prefix_occurrences(z, m, len) != 2) {
            privileged = false;
            break;
        }
        len = m;
    }
    return {closed, privileged, maxb};
}

}  // namespace detail

BorderChain compute_border_chain(const Word& u) {
    BorderChain out;
    out.border_array = border_array(u.span());
    if (u.empty()) return out;
    const auto z = z_array(u.span());
    std::uint32_t m = out.border_array.back();
    while (m > 0) {
        out.chain.push_back(m);
        out.occ.push_back(detail::prefix_occurrences(
            z, m, static_cast<std::uint32_t>(u.size())));
        m = out.border_array[m - 1];
    }
    return out;
}

bool is_closed(std::span<const Symbol> u) {
    detail::Classifier c;
    return c.classify(u).closed;
}

bool is_closed(const Word& u) { return is_closed(u.span()); }

bool is_privileged(std::span<const Symbol> u) {
    detail::Classifier c;
    return c.classify(u).privileged;
}

bool is_privileged(const Word& u) { return is_privileged(u.span()); }

namespace {

bool prefix_equals_suffix(std::span<const Symbol> u, std::size_t len) {
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < len; ++i)
        if (u[i] != u[n - len + i]) return false;
    return true;
}

std::uint64_t naive_occurrences(std::span<const Symbol> u, std::size_t m) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + m <= u.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < m; ++j)
            if (u[i + j] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

bool oracle_rec(std::span<const Symbol> u) {
    if (u.size() <= 1) return true;
    // Try every border, longest first; border lengths strictly decrease down
    // the recursion, so input length bounds the depth.
    for (std::size_t len = u.size() - 1; len >= 1; --len) {
        if (!prefix_equals_suffix(u, len)) continue;
        if (naive_occurrences(u, len) == 2 && oracle_rec(u.first(len)))
            return true;
    }
    return false;
}

}  // namespace

bool is_privileged_oracle(std::span<const Symbol> u, std::size_t length_cap) {
    if (u.size() > length_cap)
        throw std::length_error("is_privileged_oracle: input exceeds length cap");
    return oracle_rec(u);
}

bool is_privileged_oracle(const Word& u, std::size_t length_cap) {
    return is_privileged_oracle(u.span(), length_cap);
}

}  // namespace privword
