#ifndef QPOT_QPOT_HPP
#define QPOT_QPOT_HPP

#include "qpot/dgalg.hpp"
#include "qpot/error.hpp"
#include "qpot/hilbtan.hpp"
#include "qpot/koszul.hpp"
#include "qpot/linalg.hpp"
#include "qpot/luna.hpp"
#include "qpot/matrix.hpp"
#include "qpot/poly.hpp"
#include "qpot/potential.hpp"
#include "qpot/quiver.hpp"
#include "qpot/random.hpp"
#include "qpot/scalar.hpp"
#include "qpot/stability.hpp"
#include "qpot/superpotential.hpp"

#endif // QPOT_QPOT_HPP
