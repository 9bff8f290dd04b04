#pragma once

#include "paramp/closed_form.hpp"
#include "paramp/core.hpp"
#include "paramp/criteria.hpp"
#include "paramp/fock_oracle.hpp"
#include "paramp/solvers.hpp"
