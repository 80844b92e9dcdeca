#pragma once

#include <string>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/graph.hpp"

namespace lmss {

/// Named example graphs used across tests and the command line walkthrough.
/// Each mirrors the edge-list file of the same name under fixtures/.

inline Graph fig1_w() {
  return build_graph({"a", "b", "c", "d", "e", "g", "f"},
                     {{"a", "b"},
                      {"b", "c"},
                      {"c", "d"},
                      {"d", "e"},
                      {"c", "g"},
                      {"g", "f"},
                      {"f", "e"}},
                     "FIG1_W");
}

inline Graph fig2_g() {
  return build_graph({"x", "z", "y", "v", "u"},
                     {{"x", "z"},
                      {"y", "z"},
                      {"y", "v"},
                      {"y", "u"},
                      {"z", "v"},
                      {"z", "u"},
                      {"v", "u"}},
                     "FIG2_G");
}

inline Graph fig2_h() {
  return build_graph({"a", "b", "c", "d", "p0", "p1", "p2"},
                     {{"a", "p0"},
                      {"p0", "d"},
                      {"p0", "p1"},
                      {"p1", "p2"},
                      {"a", "p1"},
                      {"b", "p0"},
                      {"b", "p1"},
                      {"c", "p2"},
                      {"c", "p1"},
                      {"p1", "d"}},
                     "FIG2_H");
}

inline Graph fig3_g() {
  return build_graph({"v", "x", "p", "q", "r", "y", "z"},
                     {{"v", "x"},
                      {"x", "p"},
                      {"x", "q"},
                      {"x", "r"},
                      {"q", "r"},
                      {"q", "y"},
                      {"y", "z"}},
                     "FIG3_G");
}

inline Graph fig4_g() {
  return build_graph({"u1", "u2", "u3", "u4", "t1", "t2", "t3"},
                     {{"u1", "t1"},
                      {"t1", "t2"},
                      {"u2", "t2"},
                      {"u1", "u2"},
                      {"u2", "u3"},
                      {"u3", "t3"},
                      {"t3", "u4"},
                      {"u3", "u4"}},
                     "FIG4_G");
}

inline Graph fig5_g() {
  return build_graph(
      {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "m1", "m2"},
      {{"a1", "a2"},
       {"b1", "b2"},
       {"c1", "c2"},
       {"d1", "d2"},
       {"a2", "m1"},
       {"m1", "b2"},
       {"c2", "m2"},
       {"m2", "d2"},
       {"a1", "b1"},
       {"c1", "d1"},
       {"m1", "m2"}},
      "FIG5_G");
}

inline Graph fig6_g() {
  return build_graph({"a", "b", "d", "c", "e", "f", "h", "g", "i"},
                     {{"a", "b"},
                      {"b", "d"},
                      {"c", "d"},
                      {"c", "e"},
                      {"d", "f"},
                      {"e", "h"},
                      {"f", "h"},
                      {"g", "h"},
                      {"h", "i"}},
                     "FIG6_G");
}

inline Graph fig7_g() {
  return build_graph({"u1", "u2", "u3", "t1", "t2", "t3"},
                     {{"u1", "u2"},
                      {"u2", "u3"},
                      {"t1", "t2"},
                      {"t2", "t3"},
                      {"u1", "t1"},
                      {"u2", "t2"},
                      {"u3", "t3"}},
                     "FIG7_G");
}

inline std::vector<std::string> all_fixture_names() {
  return {"FIG1_W", "FIG2_G", "FIG2_H", "FIG3_G",
          "FIG4_G", "FIG5_G", "FIG6_G", "FIG7_G"};
}

inline Graph fixture_by_name(const std::string& name) {
  if (name == "FIG1_W") return fig1_w();
  if (name == "FIG2_G") return fig2_g();
  if (name == "FIG2_H") return fig2_h();
  if (name == "FIG3_G") return fig3_g();
  if (name == "FIG4_G") return fig4_g();
  if (name == "FIG5_G") return fig5_g();
  if (name == "FIG6_G") return fig6_g();
  if (name == "FIG7_G") return fig7_g();
  fail(ErrorKind::parse_error, "no fixture named '" + name + "'");
}

}  // namespace lmss
