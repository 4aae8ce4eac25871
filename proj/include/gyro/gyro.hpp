#pragma once

#include "gyro/axioms.hpp"
#include "gyro/chain.hpp"
#include "gyro/chain_io.hpp"
#include "gyro/concepts.hpp"
#include "gyro/coset.hpp"
#include "gyro/dyadic.hpp"
#include "gyro/einstein.hpp"
#include "gyro/element_set.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"
#include "gyro/gyration.hpp"
#include "gyro/metric.hpp"
#include "gyro/micro_assoc.hpp"
#include "gyro/mobius.hpp"
#include "gyro/prenorm.hpp"
#include "gyro/radial.hpp"
#include "gyro/report.hpp"
#include "gyro/sampling.hpp"
#include "gyro/subgyrogroup.hpp"
#include "gyro/table_io.hpp"
