#pragma once

#include "banach/blaschke_product.hpp"
#include "banach/bounded_sequence.hpp"
#include "banach/complex_polynomial.hpp"
#include "banach/config.hpp"
#include "banach/disk_algebra.hpp"
#include "banach/disk_element.hpp"
#include "banach/element.hpp"
#include "banach/errors.hpp"
#include "banach/grid_function.hpp"
#include "banach/interval_algebra.hpp"
#include "banach/io.hpp"
#include "banach/norm_bound.hpp"
#include "banach/optimize.hpp"
#include "banach/phi.hpp"
#include "banach/real_polynomial.hpp"
#include "banach/sequence_algebra.hpp"
#include "banach/verdict.hpp"
#include "banach/verify.hpp"
#include "banach/witness_sequence.hpp"
