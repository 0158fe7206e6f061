#include "corrchan/synthesis.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

namespace corrchan {

namespace {

const BasisPtr& sensor_basis() {
  static const BasisPtr b = OperatorBasis::pauli();
  return b;
}

const std::array<Mat, 16>& catalog_matrices() {
  static const std::array<Mat, 16> ms = [] {
    std::array<Mat, 16> out;
    const auto& ops = catalog_operations();
    for (int i = 0; i < 16; ++i) out[i] = ops[i].superop().matrix;
    return out;
  }();
  return ms;
}

// T_ji = Tr(G_j^dag G_i') with G_j the 4x4 Liouville matrix unit |r_j><c_j|,
// so T_ji is just entry (r_j, c_j) of catalog matrix i. Row index j = 4r + c.
const Eigen::ColPivHouseholderQR<Mat>& gram_factorization() {
  static const Eigen::ColPivHouseholderQR<Mat> qr = [] {
    Mat t(16, 16);
    const auto& ms = catalog_matrices();
    for (int j = 0; j < 16; ++j)
      for (int i = 0; i < 16; ++i) t(j, i) = ms[i](j / 4, j % 4);
    return Eigen::ColPivHouseholderQR<Mat>(t);
  }();
  return qr;
}

int liouville_index(char c) {
  switch (c) {
    case '0': return 0;
    case 'x': return 1;
    case 'y': return 2;
    case 'z': return 3;
    default: throw std::invalid_argument(std::string("bad Liouville index: ") + c);
  }
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

WeightSolution decompose(const SuperOperator& target) {
  if (target.matrix.rows() != 4 || target.matrix.cols() != 4)
    throw std::invalid_argument("decompose: target must be a 4x4 Liouville matrix");
  Vec a(16);
  for (int j = 0; j < 16; ++j) a(j) = target.matrix(j / 4, j % 4);
  const Vec p = gram_factorization().solve(a);
  WeightSolution sol;
  sol.weights = p.real();
  sol.residual = (reconstruct(sol.weights).matrix - target.matrix).norm();
  return sol;
}

SuperOperator reconstruct(const Eigen::VectorXd& weights) {
  if (weights.size() != 16)
    throw std::invalid_argument("reconstruct: expected 16 weights");
  Mat m = Mat::Zero(4, 4);
  const auto& ms = catalog_matrices();
  for (int i = 0; i < 16; ++i) m += weights(i) * ms[i];
  return {2, std::move(m), sensor_basis()};
}

Mat sparse_element(const std::string& name) {
  if (name.size() != 3 || name[0] != 'P')
    throw std::invalid_argument("sparse element name must be P followed by two of 0xyz");
  Mat m = Mat::Zero(4, 4);
  m(liouville_index(name[1]), liouville_index(name[2])) = 1.0;
  return m;
}

const std::vector<std::string>& sparse_element_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    const char idx[] = {'0', 'x', 'y', 'z'};
    for (char a : idx)
      for (char b : idx) out.push_back(std::string("P") + a + b);
    return out;
  }();
  return names;
}

Mat process_matrix(const SuperOperator& map) {
  if (map.matrix.rows() != 4 || map.matrix.cols() != 4)
    throw std::invalid_argument("process_matrix: expected a 4x4 Liouville matrix");
  // Expand the map over the sandwich basis L_nm: rho -> A_n rho A_m^dag with
  // A_n = sigma_n / sqrt(2); the coefficient matrix C is the process matrix.
  static const Mat basis_columns = [] {
    Mat cols(16, 16);
    const std::vector<Mat> s = pauli_ops();
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < 4; ++m) {
        const SuperOperator l =
            sandwich_superop(s[n] / std::sqrt(2.0), s[m] / std::sqrt(2.0), sensor_basis());
        cols.col(4 * n + m) = Eigen::Map<const Vec>(l.matrix.data(), 16);
      }
    return cols;
  }();
  static const Eigen::PartialPivLU<Mat> lu(basis_columns);
  const Vec rhs = Eigen::Map<const Vec>(map.matrix.data(), 16);
  const Vec cvec = lu.solve(rhs);
  Mat c(4, 4);
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m) c(n, m) = cvec(4 * n + m);
  return c;
}

CptpReport cptp_check(const SuperOperator& map) {
  const Mat c = process_matrix(map);
  CptpReport report;
  report.hermitian_C = (c - c.adjoint()).cwiseAbs().maxCoeff() < 1e-10;
  Eigen::SelfAdjointEigenSolver<Mat> es((c + Mat(c.adjoint())) / 2.0);
  report.min_choi_eigenvalue = es.eigenvalues().minCoeff();
  report.positive_C = report.hermitian_C && report.min_choi_eigenvalue > -1e-10;
  const std::vector<Mat> s = pauli_ops();
  Mat tp = Mat::Zero(2, 2);
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      tp += c(n, m) * (s[m] / std::sqrt(2.0)).adjoint() * (s[n] / std::sqrt(2.0));
  report.tp_defect = (tp - identity(2)).norm();
  report.trace_preserving = report.tp_defect < 1e-10;
  return report;
}

SynthesizedChannel SynthesizedChannel::make(
    std::vector<std::pair<double, CatalogOperation>> terms, Physical tag) {
  SynthesizedChannel ch;
  ch.terms = std::move(terms);
  ch.physical = tag;
  Mat m = Mat::Zero(4, 4);
  for (const auto& [w, op] : ch.terms) m += w * op.superop().matrix;
  ch.matrix = {2, std::move(m), sensor_basis()};
  if (tag == Physical::Cptp) {
    const CptpReport rep = cptp_check(ch.matrix);
    if (!rep.positive_C || !rep.trace_preserving)
      throw std::invalid_argument("channel tagged cptp fails the CPTP check");
  }
  return ch;
}

std::pair<SynthesizedChannel, SynthesizedChannel> second_order_channels() {
  const double hp = M_PI / 2.0;
  SynthesizedChannel p1 = SynthesizedChannel::make(
      {{0.5, CatalogOperation::rotation(hp, {0, 1, 0})},
       {0.5, CatalogOperation::rotation(-hp, {0, 1, 0})}},
      SynthesizedChannel::Physical::Cptp);
  SynthesizedChannel p2 = SynthesizedChannel::make(
      {{1.0, CatalogOperation::rotation(hp, {0, 1, 0})}},
      SynthesizedChannel::Physical::Cptp);
  return {std::move(p1), std::move(p2)};
}

std::array<SynthesizedChannel, 4> fourth_order_channels() {
  const double hp = M_PI / 2.0;
  auto y_diff = [&] {
    return SynthesizedChannel::make(
        {{0.5, CatalogOperation::rotation(hp, {0, 1, 0})},
         {-0.5, CatalogOperation::rotation(-hp, {0, 1, 0})}},
        SynthesizedChannel::Physical::SignedPostprocessed);
  };
  SynthesizedChannel p2 = SynthesizedChannel::make(
      {{0.5, CatalogOperation::rotation(hp, {1, 0, 0})},
       {-0.5, CatalogOperation::rotation(-hp, {1, 0, 0})}},
      SynthesizedChannel::Physical::SignedPostprocessed);
  SynthesizedChannel p3 = SynthesizedChannel::make(
      {{0.5, CatalogOperation::rotation(hp, {1, 0, 0})},
       {0.5, CatalogOperation::rotation(-hp, {1, 0, 0})}},
      SynthesizedChannel::Physical::Cptp);
  return {y_diff(), std::move(p2), std::move(p3), y_diff()};
}

SynthesizedChannel robust_repeat(double delta_theta, int n) {
  if (n < 1) throw std::invalid_argument("robust_repeat: n must be >= 1");
  // Product of n averages of opposite x rotations at angle pi/2 + dtheta.
  // Same-axis rotations compose by angle addition, so the 2^n sign strings
  // collapse to n + 1 distinct total angles with binomial weights.
  const double theta = M_PI / 2.0 + delta_theta;
  std::vector<std::pair<double, CatalogOperation>> terms;
  const double scale = std::pow(0.5, n);
  for (int k = 0; k <= n; ++k) {
    const double w = static_cast<double>(binomial(n, k)) * scale;
    terms.emplace_back(w, CatalogOperation::rotation((2 * k - n) * theta, {1, 0, 0}));
  }
  return SynthesizedChannel::make(std::move(terms),
                                  SynthesizedChannel::Physical::Cptp);
}

std::string format_channel(const SynthesizedChannel& ch) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [w, op] : ch.terms) os << w << " " << op.label() << "\n";
  return os.str();
}

CatalogOperation parse_operation_label(const std::string& label) {
  try {
    return catalog_operations()[catalog_index(label)];
  } catch (const std::invalid_argument&) {
  }
  // Generic rotation token: R + axis name + signed angle in degrees.
  if (label.size() < 3 || label[0] != 'R')
    throw std::invalid_argument("unknown operation label: " + label);
  size_t pos = 1;
  while (pos < label.size() && std::islower(static_cast<unsigned char>(label[pos])))
    ++pos;
  const std::string axis_name = label.substr(1, pos - 1);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector3d axis;
  if (axis_name == "x") axis = {1, 0, 0};
  else if (axis_name == "y") axis = {0, 1, 0};
  else if (axis_name == "z") axis = {0, 0, 1};
  else if (axis_name == "xy") axis = {s, s, 0};
  else if (axis_name == "yz") axis = {0, s, s};
  else if (axis_name == "zx") axis = {s, 0, s};
  else throw std::invalid_argument("unknown rotation axis in label: " + label);
  size_t consumed = 0;
  double deg = 0.0;
  try {
    deg = std::stod(label.substr(pos), &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rotation angle in label: " + label);
  }
  if (pos + consumed != label.size())
    throw std::invalid_argument("trailing characters in label: " + label);
  return CatalogOperation::rotation(deg * M_PI / 180.0, axis);
}

SynthesizedChannel parse_channel(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::pair<double, CatalogOperation>> terms;
  std::string line;
  while (std::getline(is, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double w;
    std::string label;
    if (!(ls >> w)) continue;  // blank or comment-only line
    if (!(ls >> label))
      throw std::invalid_argument("channel line missing operation label: " + line);
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("trailing tokens on channel line: " + line);
    terms.emplace_back(w, parse_operation_label(label));
  }
  if (terms.empty()) throw std::invalid_argument("channel text contains no terms");
  return SynthesizedChannel::make(std::move(terms),
                                  SynthesizedChannel::Physical::SignedPostprocessed);
}

long long excluded_vanishing_count(int d, int N) {
  long long total = 0, power = 1;
  for (int k = 0; k < N; ++k) {
    total += d * power;
    power *= 2 * d;
  }
  return total;
}

GeneralWeightProblem GeneralWeightProblem::standard(int N, int d,
                                                    const std::string& eta_latest_first) {
  GeneralWeightProblem pb;
  pb.N = N;
  pb.d = d;
  pb.target_eta = OrderingSequence::parse(eta_latest_first);
  if (pb.target_eta.size() != N)
    throw std::invalid_argument("target sequence length must equal N");
  if (d == 1) {
    pb.couplings = {pauli_z() / 2.0};
  } else if (d == 2) {
    pb.couplings = {pauli_x() / 2.0, pauli_z() / 2.0};
  } else if (d == 3) {
    pb.couplings = {pauli_x() / 2.0, pauli_y() / 2.0, pauli_z() / 2.0};
  } else {
    throw std::invalid_argument("standard problems support d in 1..3");
  }
  const int z_index = d - 1;  // sigma_z/2 is always last
  pb.target_alpha.assign(N, -1);
  for (int k = 0; k < N; ++k)
    if (pb.target_eta.entries[k] != 0) pb.target_alpha[k] = z_index;
  pb.rho_S = (identity(2) + pauli_z()) / 2.0;
  pb.observable = pauli_y();
  return pb;
}

namespace {

struct SlotOption {
  int eta;    // +1, -1, 0
  int alpha;  // coupling index, -1 for eta = 0
};

// Sensor-side superoperator paired with a bath selector: a bath
// anticommutator (+) pairs with the sensor commutator map and vice versa;
// identity slots leave the sensor untouched between channels.
Mat slot_sensor_matrix(const SlotOption& opt, const std::vector<Mat>& couplings) {
  if (opt.eta == 0) return Mat::Identity(4, 4);
  const Mat& a = couplings.at(opt.alpha);
  if (opt.eta > 0) return comm_superop(a, OperatorBasis::pauli()).matrix;
  return anticomm_superop(a, OperatorBasis::pauli()).matrix;
}

}  // namespace

GeneralWeightSolution general_weight_solver(const GeneralWeightProblem& pb) {
  const int N = pb.N, d = pb.d;
  if (pb.D != 2) throw std::invalid_argument("only sensor dimension 2 is supported");
  if (N < 1 || N > 4) throw std::invalid_argument("N must be in 1..4");
  if (static_cast<int>(pb.couplings.size()) != d)
    throw std::invalid_argument("couplings size must equal d");
  const long long dim_needed = 2LL * d + 1;
  if (16 < dim_needed)
    throw std::invalid_argument("feasibility D^4 >= 2d+1 violated");
  if (pb.target_eta.size() != N || static_cast<int>(pb.target_alpha.size()) != N)
    throw std::invalid_argument("target sequence lengths must equal N");

  std::vector<SlotOption> options;
  options.push_back({0, -1});
  for (int a = 0; a < d; ++a) {
    options.push_back({+1, a});
    options.push_back({-1, a});
  }
  const int n_opt = static_cast<int>(options.size());

  std::vector<Mat> option_matrix(n_opt);
  for (int o = 0; o < n_opt; ++o)
    option_matrix[o] = slot_sensor_matrix(options[o], pb.couplings);

  // u_j = Tr(O . basis_j) turns the final Liouville vector into the readout.
  Eigen::RowVectorXcd u(4);
  {
    const BasisPtr b = OperatorBasis::pauli();
    for (int j = 0; j < 4; ++j) u(j) = (pb.observable * b->element(j)).trace();
  }
  const Vec r0 = vectorize(pb.rho_S, *OperatorBasis::pauli());

  long long rows_total = 1;
  for (int k = 0; k < N; ++k) rows_total *= n_opt;

  // A retained row is the coefficient functional of one (eta, alpha) choice
  // per slot; rows whose bath correlation vanishes identically are dropped.
  struct Row {
    std::vector<int> opts;            // option index per slot, earliest first
    Eigen::RowVectorXcd head;         // u^T S_latest
    std::vector<const Mat*> inner;    // S for slots 1..N-1 (earliest first)
    bool is_target = false;
  };
  std::vector<Row> rows;
  int target_row = -1;
  for (long long flat = 0; flat < rows_total; ++flat) {
    std::vector<int> opts(N);
    long long rem = flat;
    for (int k = 0; k < N; ++k) {
      opts[k] = static_cast<int>(rem % n_opt);
      rem /= n_opt;
    }
    OrderingSequence eta;
    for (int k = 0; k < N; ++k) eta.entries.push_back(options[opts[k]].eta);
    if (vanishing_correlation(eta)) continue;
    Row row;
    row.opts = opts;
    row.head = u * option_matrix[opts[N - 1]];
    for (int k = 0; k + 1 < N; ++k) row.inner.push_back(&option_matrix[opts[k]]);
    bool match = true;
    for (int k = 0; k < N; ++k) {
      const SlotOption& o = options[opts[k]];
      if (o.eta != pb.target_eta.entries[k]) match = false;
      if (o.eta != 0 && o.alpha != pb.target_alpha[k]) match = false;
    }
    row.is_target = match;
    if (match) target_row = static_cast<int>(rows.size());
    rows.push_back(std::move(row));
  }
  if (target_row < 0)
    throw std::invalid_argument("target sequence vanishes identically; infeasible");

  const int nr = static_cast<int>(rows.size());
  GeneralWeightSolution sol;
  sol.rows_total = static_cast<int>(rows_total);
  sol.rows_retained = nr;
  sol.rows_excluded = static_cast<int>(rows_total) - nr;

  // Row functionals over the matrix-unit channel basis factorize into
  // rank-one tensors, so Gram entries are products of small inner products.
  Mat gram(nr, nr);
  const double r0sq = r0.squaredNorm();
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j <= i; ++j) {
      Complex g = (rows[i].head * rows[j].head.adjoint())(0, 0);
      for (int k = 0; k + 1 < N; ++k)
        g *= (rows[i].inner[k]->array() * rows[j].inner[k]->array().conjugate()).sum();
      g *= r0sq;
      gram(i, j) = g;
      gram(j, i) = std::conj(g);
    }

  Vec rhs = Vec::Zero(nr);
  rhs(target_row) = pb.target_value;
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(gram);
  const Vec z = cod.solve(rhs);

  // Flat channel index: slot indices (4i + j for the matrix unit |i><j|)
  // concatenated with the latest slot most significant, earliest fastest.
  // Visit every beta once per row, calling f(flat_index, A_{row,beta}).
  auto for_each_entry = [&](const Row& row, auto&& visit) {
    std::function<void(int, int, long long, Complex)> recur =
        [&](int slot, int pending_j, long long idx_prefix, Complex partial) {
          for (int i = 0; i < 4; ++i) {
            const Complex f = (slot == N - 1) ? row.head(i)
                                              : (*row.inner[slot])(pending_j, i);
            if (f == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < 4; ++j) {
              const long long idx = idx_prefix * 16 + (4 * i + j);
              if (slot == 0)
                visit(idx, partial * f * r0(j));
              else
                recur(slot - 1, j, idx, partial * f);
            }
          }
        };
    recur(N - 1, -1, 0, Complex{1.0, 0.0});
  };

  // p = B^H z accumulated row by row over the rank-one tensor structure.
  long long p_size = 1;
  for (int k = 0; k < N; ++k) p_size *= 16;
  sol.p = Vec::Zero(p_size);
  for (int r = 0; r < nr; ++r) {
    if (std::abs(z(r)) < 1e-300) continue;
    for_each_entry(rows[r], [&](long long idx, Complex a) {
      sol.p(idx) += std::conj(a) * z(r);
    });
  }

  // Post hoc: evaluate every retained coefficient against the solved p.
  auto row_dot = [&](const Row& row) {
    Complex acc{0.0, 0.0};
    for_each_entry(row, [&](long long idx, Complex a) { acc += a * sol.p(idx); });
    return acc;
  };
  sol.max_off_target = 0.0;
  for (int r = 0; r < nr; ++r) {
    const Complex v = row_dot(rows[r]);
    if (r == target_row)
      sol.achieved_target = std::real(v);
    else
      sol.max_off_target = std::max(sol.max_off_target, std::abs(v));
  }
  if (std::abs(sol.achieved_target - pb.target_value) > 1e-6)
    throw std::runtime_error("general weight solver could not reach the target row");
  return sol;
}

}  // namespace corrchan
