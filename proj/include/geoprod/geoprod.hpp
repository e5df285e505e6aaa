#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "exponent.hpp"
#include "product.hpp"
#include "identity.hpp"
#include "parser.hpp"
#include "oracle.hpp"
#include "io.hpp"
