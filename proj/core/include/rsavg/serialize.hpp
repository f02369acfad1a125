#pragma once

// Text payloads (JSON) for the cacheable objects. Readers validate shapes
// and rebuild the objects through their checking constructors; malformed
// input throws Error(cache_corrupt).

#include <memory>
#include <string>

#include "rsavg/brandt.hpp"
#include "rsavg/kernel.hpp"
#include "rsavg/quadfield.hpp"
#include "rsavg/repnum.hpp"

namespace rsavg {

std::string serialize(ClassGroup const & G);
std::shared_ptr<ClassGroup const> deserialize_class_group(std::string const & payload);

std::string serialize(RepTable const & T);
RepTable deserialize_rep_table(std::string const & payload, std::shared_ptr<ClassGroup const> group);

std::string serialize(KernelSeries const & K);
KernelSeries deserialize_kernel(std::string const & payload, std::shared_ptr<ClassGroup const> group);

std::string serialize(BrandtModule const & M);
BrandtModule deserialize_brandt(std::string const & payload);

const char * to_string(Orientation o);
Orientation parse_orientation(std::string const & s);

}  // namespace rsavg
