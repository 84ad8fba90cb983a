//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Exact.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Exact.hh"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
//---------------------------------------------------------------------------//
//! Neumaier compensated sum.
class CompensatedSum
{
  public:
    void add(double x)
    {
        double const t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
        {
            comp_ += (sum_ - t) + x;
        }
        else
        {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_{0};
    double comp_{0};
};

void check_arity(int arity)
{
    if (arity < 2)
    {
        throw ValidationError("tree arity must be at least 2");
    }
}

void check_alphabet(LabelWord const& w, ProbVector const& probs)
{
    if (w.alphabet() != probs.size())
    {
        throw ValidationError("label word alphabet does not match the "
                              "probability vector");
    }
}

//! base^exp, or max() when it exceeds the limit.
std::uint64_t bounded_power(int base, std::uint64_t exp, std::uint64_t limit)
{
    std::uint64_t value = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
    {
        if (value > limit / static_cast<std::uint64_t>(base))
        {
            return std::numeric_limits<std::uint64_t>::max();
        }
        value *= static_cast<std::uint64_t>(base);
    }
    return value;
}

//---------------------------------------------------------------------------//
/*!
 * Full labeled tree of a given depth, edges stored in kappa order.
 *
 * Enumerates every labeling in odometer order together with its
 * probability.
 */
class LabelingEnumerator
{
  public:
    LabelingEnumerator(ProbVector const& probs, int arity, int depth)
        : probs_{probs}, arity_{arity}, depth_{depth}
    {
        check_arity(arity);
        if (depth < 1)
        {
            throw ValidationError("enumeration depth must be at least 1");
        }
        std::uint64_t edges = 0;
        std::uint64_t width = 1;
        for (int d = 1; d <= depth; ++d)
        {
            width *= static_cast<std::uint64_t>(arity);
            edges += width;
            if (edges > 64)
            {
                throw BudgetError("labeling enumeration too large");
            }
        }
        num_edges_ = static_cast<int>(edges);
        auto const count = bounded_power(
            probs.size(), static_cast<std::uint64_t>(num_edges_), labeling_budget);
        if (count > labeling_budget)
        {
            throw BudgetError(std::to_string(probs.size()) + "^"
                              + std::to_string(num_edges_)
                              + " labelings exceed the enumeration budget");
        }
    }

    int num_edges() const { return num_edges_; }

    //! Call visit(labels, weight) for every labeling.
    template<class F>
    void for_each(F&& visit) const
    {
        int const n_labels = probs_.size();
        std::vector<int> labels(static_cast<std::size_t>(num_edges_), 0);
        while (true)
        {
            double weight = 1;
            for (int l : labels)
            {
                weight *= probs_[l];
            }
            visit(labels, weight);

            // Odometer increment
            int pos = 0;
            while (pos < num_edges_)
            {
                auto& digit = labels[static_cast<std::size_t>(pos)];
                if (++digit < n_labels)
                {
                    break;
                }
                digit = 0;
                ++pos;
            }
            if (pos == num_edges_)
            {
                return;
            }
        }
    }

    //! Label (0-based) word codes of all root-to-leaf paths.
    void leaf_codes(std::vector<int> const& labels,
                    std::vector<std::uint64_t>& codes) const
    {
        auto const base = static_cast<std::uint64_t>(probs_.size());
        // Level-by-level: codes of edges at current depth, in kappa order
        codes.assign(1, 0);
        std::uint64_t first_edge = 0;
        std::uint64_t width = static_cast<std::uint64_t>(arity_);
        std::vector<std::uint64_t> next;
        for (int d = 1; d <= depth_; ++d)
        {
            next.resize(codes.size() * static_cast<std::size_t>(arity_));
            for (std::size_t parent = 0; parent < codes.size(); ++parent)
            {
                for (int c = 0; c < arity_; ++c)
                {
                    auto const slot = parent * static_cast<std::size_t>(arity_)
                                      + static_cast<std::size_t>(c);
                    auto const label
                        = labels[static_cast<std::size_t>(first_edge + slot)];
                    next[slot] = codes[parent] * base
                                 + static_cast<std::uint64_t>(label);
                }
            }
            codes.swap(next);
            first_edge += width;
            width *= static_cast<std::uint64_t>(arity_);
        }
    }

  private:
    ProbVector const& probs_;
    int arity_;
    int depth_;
    int num_edges_{0};
};

//! Base-N rank of a label word with symbol s contributing digit s - 1.
std::uint64_t word_code(LabelWord const& w)
{
    std::uint64_t code = 0;
    for (auto s : w.symbols())
    {
        code = code * static_cast<std::uint64_t>(w.alphabet())
               + static_cast<std::uint64_t>(s - 1);
    }
    return code;
}
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Suffix-to-prefix recursion a_{l w} = 1 - (1 - p_l a_w)^M with a_empty = 1.
 *
 * The M edges below the root are labeled independently; a child edge labeled
 * l succeeds with probability p_l a_w, independently of its siblings.
 */
double a_probability(LabelWord const& w, ProbVector const& probs, int arity)
{
    check_arity(arity);
    check_alphabet(w, probs);
    if (w.empty())
    {
        throw ValidationError("a_probability needs a nonempty word");
    }
    double a = 1;
    for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it)
    {
        a = 1 - std::pow(1 - probs[*it - 1] * a, arity);
    }
    return a;
}

//---------------------------------------------------------------------------//
double brute_force_a(LabelWord const& w, ProbVector const& probs, int arity)
{
    check_alphabet(w, probs);
    if (w.empty())
    {
        throw ValidationError("brute_force_a needs a nonempty word");
    }
    LabelingEnumerator labelings(probs, arity, static_cast<int>(w.size()));
    auto const target = word_code(w);
    std::vector<std::uint64_t> codes;
    CompensatedSum total;
    labelings.for_each([&](std::vector<int> const& labels, double weight) {
        labelings.leaf_codes(labels, codes);
        if (std::find(codes.begin(), codes.end(), target) != codes.end())
        {
            total.add(weight);
        }
    });
    return total.value();
}

//---------------------------------------------------------------------------//
std::vector<double>
zn_distribution_bruteforce(ProbVector const& probs, int arity, int n)
{
    LabelingEnumerator labelings(probs, arity, n);
    std::vector<double> dist;
    std::vector<CompensatedSum> sums;
    std::vector<std::uint64_t> codes;
    labelings.for_each([&](std::vector<int> const& labels, double weight) {
        labelings.leaf_codes(labels, codes);
        std::sort(codes.begin(), codes.end());
        auto const z = static_cast<std::size_t>(
            std::unique(codes.begin(), codes.end()) - codes.begin());
        if (sums.size() <= z)
        {
            sums.resize(z + 1);
        }
        sums[z].add(weight);
    });
    for (auto const& s : sums)
    {
        dist.push_back(s.value());
    }
    return dist;
}

//---------------------------------------------------------------------------//
PiSequence pi_sequence(int num_labels, int arity, int n_max)
{
    check_arity(arity);
    if (num_labels < 2 || n_max < 0)
    {
        throw ValidationError("pi_sequence needs N >= 2 and n_max >= 0");
    }
    PiSequence result{num_labels, arity, {}};
    result.values.reserve(static_cast<std::size_t>(n_max) + 1);
    double pi = 1;
    result.values.push_back(pi);
    for (int n = 1; n <= n_max; ++n)
    {
        pi = 1 - std::pow(1 - pi / num_labels, arity);
        result.values.push_back(pi);
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Bisection on h(x) = 1 - (1 - x/N)^M - x.
 *
 * For M > N, h'(0) = M/N - 1 > 0 so h is positive just above zero, and
 * h(1) < 0; the root in between is the attracting fixed point.
 */
double gamma_fixed_point(int num_labels, int arity)
{
    check_arity(arity);
    if (arity <= num_labels)
    {
        throw ValidationError("no fixed point in (0,1) when M <= N: the "
                              "occupancy ratio tends to zero");
    }
    auto h = [&](double x) {
        return 1 - std::pow(1 - x / num_labels, arity) - x;
    };
    double lo = 0.5;
    while (h(lo) <= 0)
    {
        lo *= 0.5;
    }
    double hi = 1;
    for (int iter = 0; iter < 200 && hi - lo > 0; ++iter)
    {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        (h(mid) > 0 ? lo : hi) = mid;
    }
    return std::abs(h(lo)) < std::abs(h(hi)) ? lo : hi;
}

//---------------------------------------------------------------------------//
/*!
 * All a_w for |w| = n are built by prepending symbols, one level at a time:
 * word codes at length k+1 are l N^k + code(w).
 */
double expected_zn(ProbVector const& probs, int arity, int n)
{
    check_arity(arity);
    if (n < 0)
    {
        throw ValidationError("level must be non-negative");
    }
    int const n_labels = probs.size();
    if (bounded_power(n_labels, static_cast<std::uint64_t>(n), word_budget)
        > word_budget)
    {
        throw BudgetError(std::to_string(n_labels) + "^" + std::to_string(n)
                          + " words exceed the summation budget");
    }
    std::vector<double> a{1.0};
    std::vector<double> next;
    for (int k = 0; k < n; ++k)
    {
        next.resize(a.size() * static_cast<std::size_t>(n_labels));
        for (int l = 0; l < n_labels; ++l)
        {
            double const p = probs[l];
            auto const base = static_cast<std::size_t>(l) * a.size();
            for (std::size_t c = 0; c < a.size(); ++c)
            {
                next[base + c] = 1 - std::pow(1 - p * a[c], arity);
            }
        }
        a.swap(next);
    }
    CompensatedSum total;
    for (double v : a)
    {
        total.add(v);
    }
    return total.value();
}

//---------------------------------------------------------------------------//
/*!
 * Words with digit counts k = (k_1..k_N) share the bound
 * min{1, M^n prod p_i^k_i}; there are n!/prod k_i! of them. The sum is
 * accumulated in the log domain.
 */
double log_multinomial_bound(ProbVector const& probs, int arity, int n)
{
    check_arity(arity);
    if (n < 0)
    {
        throw ValidationError("level must be non-negative");
    }
    int const n_labels = probs.size();

    // C(n + N - 1, N - 1) compositions
    double log_count = std::lgamma(n + n_labels) - std::lgamma(n + 1.0)
                       - std::lgamma(static_cast<double>(n_labels));
    if (log_count > std::log(static_cast<double>(composition_budget)))
    {
        throw BudgetError("digit compositions exceed the budget");
    }

    std::vector<double> log_p(static_cast<std::size_t>(n_labels));
    for (int i = 0; i < n_labels; ++i)
    {
        log_p[static_cast<std::size_t>(i)] = std::log(probs[i]);
    }
    double const log_n_fact = std::lgamma(n + 1.0);
    double const n_log_m = n * std::log(static_cast<double>(arity));

    std::vector<double> terms;
    std::vector<int> k(static_cast<std::size_t>(n_labels), 0);
    std::function<void(int, int, double, double)> recurse;
    recurse = [&](int i, int remaining, double log_coeff, double log_prob) {
        if (i == n_labels - 1)
        {
            double const lc = log_coeff - std::lgamma(remaining + 1.0);
            double const lp
                = log_prob + remaining * log_p[static_cast<std::size_t>(i)];
            terms.push_back(lc + std::min(0.0, n_log_m + lp));
            return;
        }
        for (int ki = 0; ki <= remaining; ++ki)
        {
            recurse(i + 1,
                    remaining - ki,
                    log_coeff - std::lgamma(ki + 1.0),
                    log_prob + ki * log_p[static_cast<std::size_t>(i)]);
        }
    };
    recurse(0, n, log_n_fact, 0.0);

    double const peak = *std::max_element(terms.begin(), terms.end());
    CompensatedSum total;
    for (double t : terms)
    {
        total.add(std::exp(t - peak));
    }
    return peak + std::log(total.value());
}

double multinomial_bound(ProbVector const& probs, int arity, int n)
{
    return std::exp(log_multinomial_bound(probs, arity, n));
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
