#pragma once

// Umbrella header.

#include "gstirling/errors.hpp"
#include "gstirling/rational.hpp"
#include "gstirling/sequence.hpp"
#include "gstirling/tri_matrix.hpp"
#include "gstirling/newton.hpp"
#include "gstirling/genstirling.hpp"
#include "gstirling/determinant.hpp"
#include "gstirling/network.hpp"
#include "gstirling/tnn.hpp"
#include "gstirling/chordal.hpp"
#include "gstirling/rook.hpp"
#include "gstirling/io.hpp"
