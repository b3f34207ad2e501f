#ifndef CQF_COMBINAT_HPP
#define CQF_COMBINAT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cqf {

// Hard storage bound for permutations, subsets, posets and graphs.  The
// verification harness itself stays at n <= 9.
inline constexpr int kMaxN = 16;

using Composition = std::vector<int>;

// A subset of the positions {1, ..., n-1}; bit i stands for position i.
class Subset {
public:
    Subset() = default;
    Subset(int n, std::uint32_t bits);
    static Subset from_members(int n, std::span<const int> members);
    static Subset full(int n);
    // Partial sums of a composition of n (the last one, n, excluded).
    static Subset from_composition(const Composition& alpha);

    int ambient() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const { return i >= 1 && i < n_ && ((bits_ >> i) & 1u); }
    int size() const;
    int sum() const;
    std::vector<int> members() const;
    Subset complement() const;
    // i -> n - i
    Subset reversed() const;
    bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }
    Composition composition() const;
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset&, const Subset&) = default;

private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

// Element of S_n in one-line notation, values 1..n, positions 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::span<const int> word);
    Permutation(std::initializer_list<int> word);
    static Permutation identity(int n);
    // "531462" style; only for n <= 9.
    static Permutation parse(std::string_view one_line);

    int size() const { return n_; }
    int operator()(int i) const { return w_[i]; }
    int inverse_at(int v) const { return inv_[v]; }
    Permutation inverse() const;
    std::vector<int> word() const;
    std::string to_string() const;

    template <class F>
    friend void for_each_permutation(int n, F&& f);

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        return a.w_ <=> b.w_;
    }

private:
    void fill_inverse();

    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxN + 1> w_{};
    std::array<std::uint8_t, kMaxN + 1> inv_{};
};

// Visits S_n in lexicographic order.  n = 0 yields the empty permutation once.
template <class F>
void for_each_permutation(int n, F&& f)
{
    Permutation p = Permutation::identity(n);
    do {
        p.fill_inverse();
        f(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.w_.begin() + 1, p.w_.begin() + 1 + n));
}

std::vector<Permutation> permutations(int n);

struct ClassicStats {
    int exc = 0;
    Subset des_set;
    int des = 0;
    int maj = 0;
    int inv = 0;
};

ClassicStats classic_stats(const Permutation& sigma);
Subset excedance_set(const Permutation& sigma);
// Descent set of the barred word, alphabet 1bar < ... < nbar < 1 < ... < n,
// with the letters at excedance positions barred.
Subset dex_set(const Permutation& sigma);

struct RawlingsStats {
    int maj_ge_k = 0;
    int inv_lt_k = 0;
    int rmaj_k = 0;
};

// Requires 1 <= k <= n.
RawlingsStats rawlings_stats(const Permutation& sigma, int k);
Subset descent_set_ge(const Permutation& sigma, int k);

using Word = std::vector<int>;
int descents_of_word(const Word& w);

// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);
    static Partition from_unsorted(std::vector<int> parts);
    // (k, k, ..., k), m times
    static Partition rectangle(int k, int m);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }
    int multiplicity(int part) const;
    Partition conjugate() const;
    // Multiset union of the parts, i.e. the product rule of e, h and p.
    Partition merged_with(const Partition& other) const;
    bool dominated_by(const Partition& other) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// z_lambda = prod_i m_i! i^{m_i}
std::uint64_t z_lambda(const Partition& lambda);

// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
// Partitions of n with exactly `parts` parts.
std::vector<Partition> partitions(int n, int parts);

std::vector<Composition> compositions(int n);

std::uint64_t factorial(int n);

} // namespace cqf

#endif
