#ifndef FRACMEASURE_FRACMEASURE_HPP
#define FRACMEASURE_FRACMEASURE_HPP

#include "fracmeasure/dimension.hpp"
#include "fracmeasure/estimators.hpp"
#include "fracmeasure/fixtures.hpp"
#include "fracmeasure/geometry.hpp"
#include "fracmeasure/render.hpp"
#include "fracmeasure/separation.hpp"
#include "fracmeasure/simgeom.hpp"
#include "fracmeasure/symbolic.hpp"
#include "fracmeasure/system_file.hpp"
#include "fracmeasure/systems.hpp"
#include "fracmeasure/types.hpp"

#endif  // FRACMEASURE_FRACMEASURE_HPP
