//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Errors.hh
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace cantorflip
{
//---------------------------------------------------------------------------//
//! Input violates a documented precondition (CLI exit code 2).
class ValidationError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//---------------------------------------------------------------------------//
//! Requested work exceeds a representable or configured budget (exit 3).
class BudgetError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
}  // namespace cantorflip
