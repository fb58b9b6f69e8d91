#pragma once

#include "cartan.hpp"
#include "crystal.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "insertion.hpp"
#include "kappa.hpp"
#include "matrix.hpp"
#include "matrix_a.hpp"
#include "matrix_c.hpp"
#include "monomial.hpp"
#include "tableau.hpp"
#include "weyl.hpp"
