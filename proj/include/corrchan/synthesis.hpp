#ifndef CORRCHAN_SYNTHESIS_HPP
#define CORRCHAN_SYNTHESIS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "corrchan/catalog.hpp"
#include "corrchan/ordering.hpp"

namespace corrchan {

/// Expansion weights of a 4x4 Liouville target over the sixteen catalog
/// operations, in catalog order. The residual is the Frobenius norm of the
/// reconstruction defect and is reported, never hidden.
struct WeightSolution {
  Eigen::VectorXd weights;
  double residual = 0.0;
};

WeightSolution decompose(const SuperOperator& target);
SuperOperator reconstruct(const Eigen::VectorXd& weights);

/// Named sparse Liouville elements "Pab": the matrix unit with row a and
/// column b over the index order (1, x, y, z), e.g. sparse_element("Pxx")
/// is the map keeping only the x -> x transfer.
Mat sparse_element(const std::string& name);
const std::vector<std::string>& sparse_element_names();

/// Process-matrix diagnostics of a sensor Liouville map. C is the matrix of
/// the map over the orthonormal Kraus basis sigma_n / sqrt(2); complete
/// positivity is C >= 0 and trace preservation is sum C_nm A_m^dag A_n = 1.
struct CptpReport {
  bool hermitian_C = false;
  bool positive_C = false;
  bool trace_preserving = false;
  double min_choi_eigenvalue = 0.0;
  double tp_defect = 0.0;
};

CptpReport cptp_check(const SuperOperator& map);

/// Coefficients C of map = sum_nm C_nm (rho -> A_n rho A_m^dag) over the
/// orthonormal Kraus basis A_n = sigma_n / sqrt(2). Lets any sensor map act
/// on a larger joint state through plain operator sandwiches.
Mat process_matrix(const SuperOperator& map);

/// Weighted combination of catalog operations with a cached summed matrix.
/// Signed weights are physical through phase cycling (weighted combination
/// of separately measured signals), hence the honesty tag.
struct SynthesizedChannel {
  enum class Physical { Cptp, SignedPostprocessed };

  std::vector<std::pair<double, CatalogOperation>> terms;
  SuperOperator matrix;
  Physical physical = Physical::Cptp;

  static SynthesizedChannel make(std::vector<std::pair<double, CatalogOperation>> terms,
                                 Physical tag);
};

/// The two-slot channel pair: an average of opposite y rotations followed by
/// a single y rotation, isolating the second-order correlation.
std::pair<SynthesizedChannel, SynthesizedChannel> second_order_channels();

/// The four-slot channel set isolating the fourth-order correlation; slots
/// 1, 2 and 4 carry signed rotation differences, slot 3 is the projective
/// average of opposite x rotations.
std::array<SynthesizedChannel, 4> fourth_order_channels();

/// n-fold repetition of the slot-3 projective average built from imperfect
/// pulses of angle pi/2 + delta_theta. Expanded exactly into same-axis
/// rotation compositions; the matrix equals diag(1, 1, (-sin dtheta)^n x2).
SynthesizedChannel robust_repeat(double delta_theta, int n);

/// Text format: one `weight operation-label` line per term, '#' comments.
std::string format_channel(const SynthesizedChannel& ch);
SynthesizedChannel parse_channel(const std::string& text);
CatalogOperation parse_operation_label(const std::string& label);

/// Weight system for isolating one correlation ordering among all sensor
/// coefficient functionals, with the channel basis taken as the sixteen
/// Liouville matrix units per slot.
struct GeneralWeightProblem {
  int N = 2;                  // coupling slots
  int d = 1;                  // interaction terms
  int D = 2;                  // sensor Hilbert dimension (only 2 supported)
  OrderingSequence target_eta;          // length N
  std::vector<int> target_alpha;        // per-slot interaction index, 0-based
  std::vector<Mat> couplings;           // d sensor operators A_alpha
  Mat rho_S;                            // sensor initial state
  Mat observable;                       // sensor readout operator
  double target_value = 1.0;

  static GeneralWeightProblem standard(int N, int d, const std::string& eta_latest_first);
};

struct GeneralWeightSolution {
  Eigen::VectorXcd p;         // length 16^N over per-slot matrix-unit indices
  double achieved_target = 0.0;
  double max_off_target = 0.0;  // over retained non-target rows, post hoc
  int rows_total = 0;
  int rows_excluded = 0;
  int rows_retained = 0;
};

GeneralWeightSolution general_weight_solver(const GeneralWeightProblem& problem);

/// The closed-form count d((2d)^N - 1)/(2d - 1) of vanishing coefficients
/// with no interior identity slots below the leading commutator, evaluated
/// as the geometric sum.
long long excluded_vanishing_count(int d, int N);

}  // namespace corrchan

#endif
