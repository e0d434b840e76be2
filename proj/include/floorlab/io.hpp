#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "floorlab/evaluator.hpp"
#include "floorlab/formulas.hpp"
#include "floorlab/partitioner.hpp"
#include "floorlab/verifier.hpp"

namespace floorlab::io {

/// Order-preserving JSON so emitted payloads are byte-stable and round-trip
/// exactly (parse + dump is the identity on our own output).
using json = nlohmann::ordered_json;

/// Big integers and rationals are serialized as canonical decimal strings
/// ("p/q", or "p" when integral); JSON numbers cannot hold them exactly.
json to_json(const SidedLimits& limits);
json to_json(const Discontinuity& discontinuity);
json to_json(const std::vector<Discontinuity>& discontinuities);
json to_json(const StepInterval& interval);
json to_json(const Partition& partition);
json to_json(const Counterexample& cex);
json to_json(const ClaimResult& result);
/// Report payload: claims, totals, complete flag. Wall time is deliberately
/// excluded so identical runs serialize to identical bytes.
json to_json(const VerificationReport& report);

/// Common output wrapper: command echo, parameters, format tag, results.
json envelope(std::string_view command, json parameters, json results,
              std::string_view format = "json");

/// Canonical text rendering: 2-space indent, trailing newline.
std::string dump(const json& payload);

/// CSV with header "at,left,right,jump"; rationals in canonical form.
std::string csv(const std::vector<Discontinuity>& discontinuities);
/// CSV with header "lo,hi,value".
std::string csv(const Partition& partition);

/// Self-contained deterministic SVG step plot of a partition on a fixed
/// 800x600 canvas: one horizontal segment per interval, filled marker at the
/// closed left end, hollow marker at the open right end, axes labeled with
/// canonical rationals. All coordinates are computed in exact arithmetic and
/// rounded once, so output is byte-identical across runs and platforms.
std::string render_svg(const Partition& partition);

} // namespace floorlab::io
