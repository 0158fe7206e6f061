#ifndef CORRCHAN_REFERENCE_HPP
#define CORRCHAN_REFERENCE_HPP

#include <array>
#include <string>

namespace corrchan::refdata {

// Reference expansion weights of the sixteen sparse Liouville elements over
// the operation catalog. Row order matches sparse_element_names(); column
// order matches catalog_operations().
struct SparseExpansion {
  const char* element;
  std::array<double, 16> weights;
};

inline constexpr double h = 0.5, q = 0.25;

inline const std::array<SparseExpansion, 16> kSparseExpansions = {{
    {"P00", {-h, q, q, q, q, q, q, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"P0x", {h, -q, -q, -q, -q, -q, -q, 0, 0, 0, 1, 0, 0, 1, 0, 0}},
    {"P0y", {h, -q, -q, -q, -q, -q, -q, 0, 0, 0, 0, 1, 0, 0, 1, 0}},
    {"P0z", {h, -q, -q, -q, -q, -q, -q, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
    {"Px0", {-h, q, q, q, q, q, q, 0, 0, 0, 0, 0, 0, -1, 0, 0}},
    {"Pxx", {h, q, -q, -q, q, -q, -q, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"Pxy", {h, -q, -q, -q, -q, -q, q, h, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"Pxz", {h, -q, q, -q, -q, -q, -q, 0, 0, h, 0, 0, 0, 0, 0, 0}},
    {"Py0", {-h, q, q, q, q, q, q, 0, 0, 0, 0, 0, 0, 0, -1, 0}},
    {"Pyx", {h, -q, -q, q, -q, -q, -q, h, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"Pyy", {h, -q, q, -q, -q, q, -q, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"Pyz", {h, -q, -q, -q, q, -q, -q, 0, h, 0, 0, 0, 0, 0, 0, 0}},
    {"Pz0", {-h, q, q, q, q, q, q, 0, 0, 0, 0, 0, 0, 0, 0, -1}},
    {"Pzx", {h, -q, -q, -q, -q, q, -q, 0, 0, h, 0, 0, 0, 0, 0, 0}},
    {"Pzy", {h, q, -q, -q, -q, -q, -q, 0, h, 0, 0, 0, 0, 0, 0, 0}},
    {"Pzz", {h, -q, -q, q, -q, -q, q, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
}};

}  // namespace corrchan::refdata

#endif
