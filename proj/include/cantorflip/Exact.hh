//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Exact.hh
//! \brief Exact occupancy probabilities, expected counts, and enumeration
//!        oracles.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <vector>

#include "ProbVector.hh"
#include "Symbolic.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
//! Symmetric-case occupancy probabilities pi_0..pi_n.
struct PiSequence
{
    int num_labels{2};
    int arity{2};
    std::vector<double> values;
};

//! Largest number of labelings brute_force_a will enumerate.
inline constexpr std::uint64_t labeling_budget = std::uint64_t{1} << 24;
//! Largest number of words expected_zn will sum over.
inline constexpr std::uint64_t word_budget = std::uint64_t{1} << 20;
//! Largest number of digit compositions multinomial_bound will visit.
inline constexpr std::uint64_t composition_budget = 10'000'000;

//---------------------------------------------------------------------------//
// Probability that some root path of length |w| carries label word w
double a_probability(LabelWord const& w, ProbVector const& probs, int arity);

// Same probability by summing over every labeling of the depth-|w| tree
double brute_force_a(LabelWord const& w, ProbVector const& probs, int arity);

// pi_0 = 1, pi_n = 1 - (1 - pi_{n-1}/N)^M
PiSequence pi_sequence(int num_labels, int arity, int n_max);

// Attracting fixed point in (0,1) of x = 1 - (1 - x/N)^M, for M > N
double gamma_fixed_point(int num_labels, int arity);

// E[Z_n]: sum of a_probability over all label words of length n
double expected_zn(ProbVector const& probs, int arity, int n);

// Log of the digit-frequency upper bound on E[Z_n]
double log_multinomial_bound(ProbVector const& probs, int arity, int n);

// exp(log_multinomial_bound)
double multinomial_bound(ProbVector const& probs, int arity, int n);

// P(Z_n = z) for z = 0..max by enumerating all labelings of the tree
std::vector<double>
zn_distribution_bruteforce(ProbVector const& probs, int arity, int n);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
