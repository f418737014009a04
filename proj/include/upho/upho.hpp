#ifndef UPHO_UPHO_HPP_
#define UPHO_UPHO_HPP_

#include "upho/constructions.hpp"
#include "upho/dot.hpp"
#include "upho/error.hpp"
#include "upho/io.hpp"
#include "upho/isomorphism.hpp"
#include "upho/monoid.hpp"
#include "upho/planar.hpp"
#include "upho/poset.hpp"
#include "upho/series.hpp"
#include "upho/sturm.hpp"
#include "upho/symfunc.hpp"
#include "upho/upho_check.hpp"

#endif  // UPHO_UPHO_HPP_
