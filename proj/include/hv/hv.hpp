#pragma once

#include "hv/binary_forms.hpp"
#include "hv/dolbeault.hpp"
#include "hv/errors.hpp"
#include "hv/exotic_triple.hpp"
#include "hv/kummer.hpp"
#include "hv/linalg.hpp"
#include "hv/multipoly.hpp"
#include "hv/poly.hpp"
#include "hv/projective.hpp"
#include "hv/random.hpp"
#include "hv/resultant.hpp"
#include "hv/roots.hpp"
#include "hv/scalar.hpp"
#include "hv/ternary.hpp"
#include "hv/trope.hpp"
