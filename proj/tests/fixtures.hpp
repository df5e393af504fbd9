#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "brainb/config.hpp"

namespace brainb::test {

inline std::string published_log_text() {
  std::ifstream in(std::string(BRAINB_TEST_DATA) + "/published_session.log");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// The published sequences, transcribed independently of the fixture file.
inline const std::vector<std::int64_t> kLostToFound = {
    14930, 22250, 11760, 43040, 26330, 34970, 46660, 43930, 50770, 61550,
    54100, 37390, 31650, 44310, 25760, 50570, 28830, 56300, 69740, 62640,
    39810, 62330, 65290, 59430, 22570, 39530, 31730, 72420};

inline const std::vector<std::int64_t> kFoundToLost = {
    31840, 10960, 60270, 51580, 31670, 49260, 53710, 86830, 70560, 68870,
    45500, 52660, 45640, 46870, 75860, 69610, 61980, 75310, 90440, 54870,
    69820, 75170, 84350, 80480, 53490, 56200, 83870, 78270};

// Small world for fast tests.
inline SessionConfig small_config() {
  SessionConfig c;
  c.width = 320;
  c.height = 240;
  c.window_w = 96;
  c.window_h = 96;
  c.initial_noc = 6;
  c.noc_max = 40;
  c.box_half_min = 6;
  c.box_half_max = 20;
  return c;
}

}  // namespace brainb::test
