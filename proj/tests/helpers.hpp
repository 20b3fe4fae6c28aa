#pragma once

#include <string>

#include "mseg/notation.hpp"

namespace t {

inline mseg::Multisegment M(const std::string& text) {
  mseg::LineTable table = mseg::LineTable::standard();
  return mseg::parse_multisegment(text, table);
}

inline mseg::Segment S(const std::string& text) {
  mseg::LineTable table = mseg::LineTable::standard();
  return mseg::parse_segment(text, table);
}

}  // namespace t
