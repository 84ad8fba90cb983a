//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Deterministic.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Deterministic.hh"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
//! (word code, per-word state) pairs for level-by-level generation.
using StateList = std::vector<std::pair<std::uint64_t, int>>;

void check_length(int n)
{
    if (n < 1 || n > 63)
    {
        throw ValidationError("word length must lie in 1..63, got "
                              + std::to_string(n));
    }
}

void normalize(StateList& states)
{
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    if (states.size() > word_state_budget)
    {
        throw BudgetError("word generation exceeds the state budget of "
                          + std::to_string(word_state_budget));
    }
}

WordSet collect_words(StateList const& states, int n)
{
    WordSet result{n, {}};
    result.codes.reserve(states.size());
    for (auto const& [code, state] : states)
    {
        if (result.codes.empty() || result.codes.back() != code)
        {
            result.codes.push_back(code);
        }
    }
    return result;
}

//! Growable bitset of graph vertices.
class VertexSet
{
  public:
    explicit VertexSet(int size)
        : bits_((static_cast<std::size_t>(size) + 63) / 64, 0)
    {
    }

    void insert(int v)
    {
        bits_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1}
                                                   << (v % 64);
    }
    bool contains(int v) const
    {
        return (bits_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }

  private:
    std::vector<std::uint64_t> bits_;
};
}  // namespace

//---------------------------------------------------------------------------//
DeterministicSpec DeterministicSpec::every_mth(int m)
{
    DeterministicSpec spec{m, m - 1};
    spec.validate();
    return spec;
}

void DeterministicSpec::validate() const
{
    if (period < 2)
    {
        throw ValidationError("labeling period m must be at least 2");
    }
    if (offset < 0 || offset >= period)
    {
        throw ValidationError("labeling offset must lie in 0..m-1");
    }
}

//---------------------------------------------------------------------------//
bool WordSet::contains(std::uint64_t code) const
{
    return std::binary_search(codes.begin(), codes.end(), code);
}

std::vector<std::string> WordSet::strings() const
{
    std::vector<std::string> result;
    result.reserve(codes.size());
    for (auto code : codes)
    {
        std::string word(static_cast<std::size_t>(length), '0');
        for (int i = 0; i < length; ++i)
        {
            if ((code >> (length - 1 - i)) & 1u)
            {
                word[static_cast<std::size_t>(i)] = '1';
            }
        }
        result.push_back(std::move(word));
    }
    return result;
}

bool WordSet::subset_of(WordSet const& other) const
{
    return length == other.length
           && std::includes(other.codes.begin(),
                            other.codes.end(),
                            codes.begin(),
                            codes.end());
}

std::uint64_t binary_code(std::string const& word)
{
    std::uint64_t code = 0;
    for (char c : word)
    {
        if (c != '0' && c != '1')
        {
            throw ValidationError("binary word may only contain 0 and 1");
        }
        code = (code << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return code;
}

LabelWord to_label_word(std::uint64_t code, int length)
{
    std::vector<int> symbols(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
    {
        symbols[static_cast<std::size_t>(i)]
            = static_cast<int>((code >> (length - 1 - i)) & 1u) + 1;
    }
    return LabelWord(2, std::move(symbols));
}

//---------------------------------------------------------------------------//
int level_of(int m)
{
    if (m == 2)
    {
        throw ValidationError("m = 2 labels the tree like the full Cantor "
                              "set; there is no shift level L");
    }
    if (m < 3)
    {
        throw ValidationError("labeling period m must be at least 2");
    }
    // floor(log2(m + 1)) - 1
    int bits = 0;
    for (auto v = static_cast<unsigned int>(m) + 1; v > 1; v >>= 1)
    {
        ++bits;
    }
    return bits - 1;
}

//---------------------------------------------------------------------------//
double rho(int level)
{
    if (level < 1)
    {
        throw ValidationError("shift level L must be at least 1");
    }
    auto f = [level](double x) {
        return std::pow(x, level + 1) - std::pow(x, level) - 1;
    };
    double lo = 1;
    double hi = 2;
    for (int iter = 0; iter < 200; ++iter)
    {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
}

//---------------------------------------------------------------------------//
double dim_Fm(int m, double ratio)
{
    if (!(ratio > 0 && ratio <= 0.5))
    {
        throw ValidationError("contraction ratio must lie in (0, 1/2]");
    }
    if (m == 2)
    {
        return std::log(2.0) / -std::log(ratio);
    }
    return std::log(rho(level_of(m))) / -std::log(ratio);
}

//---------------------------------------------------------------------------//
ModGraph mod_graph(int m)
{
    if (m < 3)
    {
        throw ValidationError("mod-m graph needs m >= 3");
    }
    ModGraph graph{m, {}};
    graph.successors.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
    {
        graph.successors.push_back({(2 * j + 1) % m, (2 * j + 2) % m});
    }
    return graph;
}

//---------------------------------------------------------------------------//
/*!
 * Paths are aggregated by (label word, kappa mod m) of their last edge: the
 * children of edge kappa are 2 kappa + 2 and 2 kappa + 3, so the residue
 * determines every label below it.
 */
WordSet tree_words(DeterministicSpec const& spec, int n)
{
    spec.validate();
    check_length(n);
    int const m = spec.period;
    auto label = [&spec](int residue) {
        return residue == spec.offset ? std::uint64_t{1} : std::uint64_t{0};
    };

    StateList states;
    for (int k = 0; k < 2; ++k)
    {
        int const residue = k % m;
        states.emplace_back(label(residue), residue);
    }
    normalize(states);

    StateList next;
    for (int level = 2; level <= n; ++level)
    {
        next.clear();
        next.reserve(states.size() * 2);
        for (auto const& [code, residue] : states)
        {
            for (int c = 2; c <= 3; ++c)
            {
                int const child = (2 * residue + c) % m;
                next.emplace_back((code << 1) | label(child), child);
            }
        }
        normalize(next);
        states.swap(next);
    }
    return collect_words(states, n);
}

//---------------------------------------------------------------------------//
/*!
 * Determinized walk: every word keeps the set of graph vertices at which a
 * walk emitting it can end. Visiting vertex 0 emits 1, any other vertex 0.
 */
WordSet graph_words(int m, int n)
{
    auto const graph = mod_graph(m);
    check_length(n);
    auto emit = [](int v) { return v == 0 ? std::uint64_t{1} : 0; };

    std::map<std::uint64_t, VertexSet> current;
    for (int start : {1, 2})
    {
        auto [it, inserted] = current.try_emplace(emit(start), m);
        it->second.insert(start);
    }
    for (int level = 2; level <= n; ++level)
    {
        std::map<std::uint64_t, VertexSet> next;
        for (auto const& [code, vertices] : current)
        {
            for (int v = 0; v < m; ++v)
            {
                if (!vertices.contains(v))
                {
                    continue;
                }
                for (int u : graph.successors[static_cast<std::size_t>(v)])
                {
                    auto [it, inserted]
                        = next.try_emplace((code << 1) | emit(u), m);
                    it->second.insert(u);
                }
            }
        }
        if (next.size() > word_state_budget)
        {
            throw BudgetError("graph word generation exceeds the budget");
        }
        current = std::move(next);
    }

    WordSet result{n, {}};
    result.codes.reserve(current.size());
    for (auto const& entry : current)
    {
        result.codes.push_back(entry.first);
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * State is the number of zeros since the last 1 (or since the start),
 * capped at L; a 1 may be appended only once L zeros have been seen.
 */
WordSet sft_words(int level, int n)
{
    if (level < 1)
    {
        throw ValidationError("shift level L must be at least 1");
    }
    check_length(n);
    StateList states{{0, 1}};
    for (int i = 2; i <= n; ++i)
    {
        StateList next;
        next.reserve(states.size() * 2);
        for (auto const& [code, zeros] : states)
        {
            next.emplace_back(code << 1, std::min(zeros + 1, level));
            if (zeros >= level)
            {
                next.emplace_back((code << 1) | 1u, 0);
            }
        }
        normalize(next);
        states.swap(next);
    }
    return collect_words(states, n);
}

//---------------------------------------------------------------------------//
GrowthRate growth_rate(std::vector<std::uint64_t> const& counts)
{
    if (counts.size() < 5)
    {
        throw ValidationError("growth rate needs at least 5 counts");
    }
    for (auto c : counts)
    {
        if (c == 0)
        {
            throw ValidationError("word counts must be positive");
        }
    }
    GrowthRate result;
    result.last_ratio = static_cast<double>(counts.back())
                        / static_cast<double>(counts[counts.size() - 2]);

    auto const n = static_cast<double>(counts.size());
    double mx = (n - 1) / 2;
    double my = 0;
    for (auto c : counts)
    {
        my += std::log(static_cast<double>(c));
    }
    my /= n;
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
    {
        double const dx = static_cast<double>(i) - mx;
        sxy += dx * (std::log(static_cast<double>(counts[i])) - my);
        sxx += dx * dx;
    }
    result.regression = std::exp(sxy / sxx);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
