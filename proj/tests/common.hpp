#pragma once

#include <string>

#include "pdisk/verify.hpp"

#ifndef PDISK_FIXTURES
#error "PDISK_FIXTURES must point at the fixture directory"
#endif

namespace testing_support {

inline std::string fixture(const std::string& rel) { return std::string(PDISK_FIXTURES) + "/" + rel; }

inline pdisk::Triangulation example1_tau() {
  return pdisk::io::bundle_from_json(pdisk::io::read_file(fixture("example1.json"))).triangulation;
}

inline pdisk::Triangulation example2_tau() {
  return pdisk::io::bundle_from_json(pdisk::io::read_file(fixture("example2.json"))).triangulation;
}

inline pdisk::io::QpData qp_dir(const std::string& dir) {
  using pdisk::io::read_file;
  return pdisk::io::qp_data_from_json(read_file(fixture(dir + "/quiver.json")), read_file(fixture(dir + "/potential.json")),
                                      read_file(fixture(dir + "/representations.json")),
                                      read_file(fixture(dir + "/sequences.json")));
}

}  // namespace testing_support
