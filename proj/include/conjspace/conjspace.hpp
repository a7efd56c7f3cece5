#pragma once

#include "conjspace/bordism/qm_ring.hpp"
#include "conjspace/bordism/tables.hpp"
#include "conjspace/bordism/transfer.hpp"
#include "conjspace/bordism/zubr.hpp"
#include "conjspace/conjugation.hpp"
#include "conjspace/f2_matrix.hpp"
#include "conjspace/gl2.hpp"
#include "conjspace/int_matrix.hpp"
#include "conjspace/integer.hpp"
#include "conjspace/lambda.hpp"
#include "conjspace/lattice.hpp"
#include "conjspace/normal_form.hpp"
#include "conjspace/threefold.hpp"
#include "conjspace/trilinear.hpp"
#include "conjspace/wall.hpp"
