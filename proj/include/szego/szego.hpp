#ifndef SZEGO_SZEGO_HPP
#define SZEGO_SZEGO_HPP

#include "szego/alpha_moments.hpp"
#include "szego/beta_poly.hpp"
#include "szego/combinatorics.hpp"
#include "szego/complex_rational.hpp"
#include "szego/gaussian_moments.hpp"
#include "szego/graph_count.hpp"
#include "szego/monte_carlo.hpp"
#include "szego/multi_index.hpp"
#include "szego/opuc.hpp"
#include "szego/power_series.hpp"
#include "szego/rational.hpp"
#include "szego/rational_function.hpp"
#include "szego/report.hpp"
#include "szego/volume.hpp"

#endif  // SZEGO_SZEGO_HPP
