#pragma once

#include "arcmod/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcmod {

// Input-contract violations carry a short machine-readable code; the CLI
// maps them to exit status 2.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Finite digraph without loops or directed 2-cycles. Vertices are 1-based.
struct Quiver {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target)

  bool operator==(const Quiver& o) const;

  int arrows_between(int s, int t) const;
  std::vector<int> sinks() const;
  std::vector<int> sources() const;
  bool is_sink(int v) const;
  bool is_source(int v) const;
};

struct QuiverReport {
  bool acyclic = false;
  std::vector<int> topological_order;  // filled when acyclic
  bool affine_d = false;               // underlying graph is the affine D diagram
};

// Throws InputError (loop / two_cycle / index) on malformed input, otherwise
// returns structural facts about q.
QuiverReport validate_quiver(const Quiver& q);

Quiver mutate(const Quiver& q, int vertex);
Quiver opposite(const Quiver& q);

// The canonically oriented affine D quiver on n+1 vertices:
// 1 -> 3 <- 2, chain 3 -> 4 -> ... -> n-1, fork n-1 -> n and n-1 -> n+1.
Quiver canonical_affine_d(int n);

// Euler form matrix E (E[i][i] = 1, E[i][j] = -#arrows i->j) together with
// the Coxeter transform used as the independent Ext oracle.
struct EulerData {
  explicit EulerData(const Quiver& q);

  const QMat& matrix() const { return e_; }
  const QMat& coxeter() const { return phi_; }
  const QMat& coxeter_inverse() const { return phi_inv_; }

  BigInt pairing(const std::vector<BigInt>& x, const std::vector<BigInt>& y) const;

 private:
  QMat e_, phi_, phi_inv_;
};

std::vector<BigInt> delta_vector(int n);  // (1,1,2,...,2,1,1), the radical generator

}  // namespace arcmod
