#ifndef MAJORIZE_MAJORIZE_HPP
#define MAJORIZE_MAJORIZE_HPP

#include "majorize/error.hpp"
#include "majorize/rational.hpp"
#include "majorize/vector.hpp"
#include "majorize/permutation.hpp"
#include "majorize/monomial.hpp"
#include "majorize/matrix.hpp"
#include "majorize/chain.hpp"
#include "majorize/simplex.hpp"
#include "majorize/permutohedron.hpp"
#include "majorize/rado.hpp"
#include "majorize/multiplicative.hpp"

#endif  // MAJORIZE_MAJORIZE_HPP
