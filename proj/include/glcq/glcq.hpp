#pragma once

#include "glcq/errors.hpp"
#include "glcq/rational.hpp"
#include "glcq/qpoly.hpp"
#include "glcq/field.hpp"
#include "glcq/scalar.hpp"
#include "glcq/matrix.hpp"
#include "glcq/window.hpp"
#include "glcq/torus.hpp"
#include "glcq/eala.hpp"
#include "glcq/fock.hpp"
#include "glcq/hwv.hpp"
#include "glcq/parser.hpp"
#include "glcq/rng.hpp"
#include "glcq/verify.hpp"
