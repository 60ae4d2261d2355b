#ifndef PTAS_PTAS_HPP
#define PTAS_PTAS_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "multi_index.hpp"
#include "polynomial.hpp"
#include "text_format.hpp"
#include "combinatorics.hpp"
#include "grid.hpp"
#include "bernstein.hpp"
#include "certificate.hpp"
#include "graph.hpp"
#include "selftest.hpp"

#endif // PTAS_PTAS_HPP
