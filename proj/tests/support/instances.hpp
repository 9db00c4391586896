#pragma once

// Hand-built and randomized radio instances shared by the unit tests and
// the acceptance runner.

#include <cstdint>
#include <vector>

#include "celltrace/core/grid.hpp"
#include "celltrace/ingest/spectrum.hpp"
#include "celltrace/radio/scenario.hpp"
#include "oracles.hpp"

namespace celltrace::instances {

/// One operator "T": macro 0.7 GHz / 12 MHz, micro 1.9 GHz / 15 MHz.
SpectrumPlan toy_spectrum();
Grid toy_grid();

struct Instance {
  RadioScenario sc;
  std::vector<double> demand_bps;
  ReusePlan plan;
};

/// Five omni macro BSs over the toy grid, every analysis cell a location.
/// `bss` mirrors the stations for the SINR oracle.
struct SinrToy {
  Instance inst;
  std::vector<oracle::Tx> bss;
  double noise_mw;
};
SinrToy sinr_toy();

/// A single omni macro BS over the same locations.
Instance single_bs();

/// Three omni macro BSs 10 m apart with 24 locations on a 100 m ring.
Instance reuse_toy();

/// Random single-tier macro layouts for the hill-climb property.
Instance random_reuse(std::uint64_t seed);

/// 50 BSs (macro and micro) over 2 km with random demand and reuse plan.
Instance random_healing(std::uint64_t seed);

/// One demand location whose server is drowned by a nearby BS that does not
/// cover it. Only blanking that BS lifts the SINR above the floor.
Instance abs_only();

/// One weak location midway between two low-power BSs; below the floor
/// alone, usable only when the second BS joins the first.
Instance comp_only();

}  // namespace celltrace::instances
