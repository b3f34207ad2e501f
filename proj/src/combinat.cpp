#include "cqf/combinat.hpp"

#include <bit>
#include <numeric>

#include "cqf/errors.hpp"

namespace cqf {

// ---- Subset ----------------------------------------------------------------

Subset::Subset(int n, std::uint32_t bits) : n_(n), bits_(bits)
{
    if (n < 0 || n > kMaxN)
        throw ParameterError("Subset: ambient size out of range");
    const std::uint32_t allowed = n >= 2 ? (((1u << n) - 1u) & ~1u) : 0u;
    if ((bits & ~allowed) != 0)
        throw ParameterError("Subset: members must lie in [n-1]");
}

Subset Subset::from_members(int n, std::span<const int> members)
{
    std::uint32_t bits = 0;
    for (int i : members) {
        if (i < 1 || i >= n)
            throw ParameterError("Subset: member " + std::to_string(i) + " outside [n-1]");
        bits |= 1u << i;
    }
    return Subset(n, bits);
}

Subset Subset::full(int n)
{
    return Subset(n, n >= 2 ? (((1u << n) - 1u) & ~1u) : 0u);
}

Subset Subset::from_composition(const Composition& alpha)
{
    int n = 0;
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= 0)
            throw ParameterError("composition parts must be positive");
        n += alpha[i];
        if (i + 1 < alpha.size())
            bits |= 1u << n;
    }
    return Subset(n, bits);
}

int Subset::size() const { return std::popcount(bits_); }

int Subset::sum() const
{
    int s = 0;
    for (int i = 1; i < n_; ++i)
        if (contains(i))
            s += i;
    return s;
}

std::vector<int> Subset::members() const
{
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

Subset Subset::complement() const { return Subset(n_, full(n_).bits_ & ~bits_); }

Subset Subset::reversed() const
{
    std::uint32_t bits = 0;
    for (int i = 1; i < n_; ++i)
        if (contains(i))
            bits |= 1u << (n_ - i);
    return Subset(n_, bits);
}

Composition Subset::composition() const
{
    Composition alpha;
    if (n_ == 0)
        return alpha;
    int last = 0;
    for (int i = 1; i < n_; ++i)
        if (contains(i)) {
            alpha.push_back(i - last);
            last = i;
        }
    alpha.push_back(n_ - last);
    return alpha;
}

std::string Subset::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
        if (!first)
            s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

// ---- Permutation -----------------------------------------------------------

Permutation::Permutation(std::span<const int> word)
{
    if (word.size() > static_cast<std::size_t>(kMaxN))
        throw ParameterError("Permutation: n exceeds storage bound");
    n_ = static_cast<std::uint8_t>(word.size());
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        const int v = word[i];
        if (v < 1 || v > n_ || ((seen >> v) & 1u))
            throw ParameterError("Permutation: word is not a bijection of [n]");
        seen |= 1u << v;
        w_[i + 1] = static_cast<std::uint8_t>(v);
    }
    fill_inverse();
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::span<const int>(word.begin(), word.size()))
{
}

Permutation Permutation::identity(int n)
{
    if (n < 0 || n > kMaxN)
        throw ParameterError("Permutation: n out of range");
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 1; i <= n; ++i)
        p.w_[i] = static_cast<std::uint8_t>(i);
    p.fill_inverse();
    return p;
}

Permutation Permutation::parse(std::string_view one_line)
{
    std::vector<int> w;
    for (char c : one_line) {
        if (c < '1' || c > '9')
            throw ParameterError("Permutation::parse: expected digits 1-9");
        w.push_back(c - '0');
    }
    return Permutation(w);
}

void Permutation::fill_inverse()
{
    for (int i = 1; i <= n_; ++i)
        inv_[w_[i]] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::inverse() const
{
    std::vector<int> w(n_);
    for (int v = 1; v <= n_; ++v)
        w[v - 1] = inv_[v];
    return Permutation(w);
}

std::vector<int> Permutation::word() const { return std::vector<int>(w_.begin() + 1, w_.begin() + 1 + n_); }

std::string Permutation::to_string() const
{
    std::string s;
    for (int i = 1; i <= n_; ++i) {
        if (n_ > 9 && i > 1)
            s += ',';
        s += std::to_string(w_[i]);
    }
    return s;
}

std::vector<Permutation> permutations(int n)
{
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

// ---- statistics ------------------------------------------------------------

ClassicStats classic_stats(const Permutation& sigma)
{
    const int n = sigma.size();
    ClassicStats st;
    std::uint32_t des = 0;
    for (int i = 1; i <= n; ++i) {
        const int a = sigma(i);
        if (i < n && a > i)
            ++st.exc;
        if (i < n && a > sigma(i + 1)) {
            des |= 1u << i;
            ++st.des;
            st.maj += i;
        }
        for (int j = i + 1; j <= n; ++j)
            st.inv += a > sigma(j);
    }
    st.des_set = Subset(n, des);
    return st;
}

Subset excedance_set(const Permutation& sigma)
{
    const int n = sigma.size();
    std::uint32_t bits = 0;
    for (int i = 1; i < n; ++i)
        if (sigma(i) > i)
            bits |= 1u << i;
    return Subset(n, bits);
}

Subset dex_set(const Permutation& sigma)
{
    const int n = sigma.size();
    // barred a -> a, unbarred a -> a + n
    auto key = [&](int i) { return sigma(i) > i ? sigma(i) : sigma(i) + n; };
    std::uint32_t bits = 0;
    for (int i = 1; i < n; ++i)
        if (key(i) > key(i + 1))
            bits |= 1u << i;
    return Subset(n, bits);
}

Subset descent_set_ge(const Permutation& sigma, int k)
{
    const int n = sigma.size();
    std::uint32_t bits = 0;
    for (int i = 1; i < n; ++i)
        if (sigma(i) - sigma(i + 1) >= k)
            bits |= 1u << i;
    return Subset(n, bits);
}

RawlingsStats rawlings_stats(const Permutation& sigma, int k)
{
    const int n = sigma.size();
    if (k < 1 || k > std::max(n, 1))
        throw ParameterError("rawlings_stats: k must lie in [1, n]");
    RawlingsStats st;
    for (int i = 1; i <= n; ++i) {
        if (i < n && sigma(i) - sigma(i + 1) >= k)
            st.maj_ge_k += i;
        for (int j = i + 1; j <= n; ++j) {
            const int d = sigma(i) - sigma(j);
            if (d > 0 && d < k)
                ++st.inv_lt_k;
        }
    }
    st.rmaj_k = st.maj_ge_k + st.inv_lt_k;
    return st;
}

int descents_of_word(const Word& w)
{
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        d += w[i] > w[i + 1];
    return d;
}

// ---- partitions ------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ParameterError("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ParameterError("Partition: parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int k, int m) { return Partition(std::vector<int>(m, k)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    if (parts_.empty())
        return Partition();
    for (int j = 1; j <= parts_[0]; ++j) {
        int len = 0;
        for (int p : parts_)
            len += p >= j;
        c.push_back(len);
    }
    return Partition(std::move(c));
}

Partition Partition::merged_with(const Partition& other) const
{
    std::vector<int> all;
    all.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(all),
               std::greater<>());
    return Partition(std::move(all));
}

bool Partition::dominated_by(const Partition& other) const
{
    int a = 0;
    int b = 0;
    const std::size_t len = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < parts_.size() ? parts_[i] : 0;
        b += i < other.parts_.size() ? other.parts_[i] : 0;
        if (a > b)
            return false;
    }
    return true;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t z_lambda(const Partition& lambda)
{
    std::uint64_t z = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int m = static_cast<int>(j - i);
        z *= factorial(m);
        for (int r = 0; r < m; ++r)
            z *= static_cast<std::uint64_t>(parts[i]);
        i = j;
    }
    return z;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions(int n, int parts)
{
    std::vector<Partition> out;
    for (auto& p : partitions(n))
        if (p.length() == parts)
            out.push_back(std::move(p));
    return out;
}

std::vector<Composition> compositions(int n)
{
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits)
        out.push_back(Subset(n, bits << 1).composition());
    return out;
}

} // namespace cqf
