#pragma once

#include "pyramidal/error.hpp"
#include "pyramidal/permutation.hpp"
#include "pyramidal/perm_group.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/finite_field.hpp"
#include "pyramidal/linear.hpp"
#include "pyramidal/classify.hpp"
#include "pyramidal/constructions.hpp"
#include "pyramidal/designs.hpp"
#include "pyramidal/sweep.hpp"
