// Copyright 2026 The realvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "realvar/sdpa.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace realvar {

void write_sdpa(std::ostream& os, const DenseSdp& sdp, const std::string& comment) {
  const Eigen::Index m = static_cast<Eigen::Index>(sdp.A.size());
  const Eigen::Index r = sdp.C.rows();
  os << "\"" << comment << "\n";
  os << m << "\n1\n" << r << "\n";
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < m; ++i) os << (i ? " " : "") << -sdp.b[i];
  os << "\n";
  auto block = [&](int mat, const Eigen::MatrixXd& F) {
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = i; j < r; ++j)
        if (F(i, j) != 0.0) os << mat << " 1 " << i + 1 << " " << j + 1 << " " << F(i, j) << "\n";
  };
  block(0, -sdp.C);
  for (Eigen::Index i = 0; i < m; ++i) block(static_cast<int>(i + 1), -sdp.A[i]);
}

namespace {

std::string strip_punct(std::string s) {
  for (char& c : s)
    if (c == '{' || c == '}' || c == ',' || c == '(' || c == ')') c = ' ';
  return s;
}

std::string next_data_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line[p] == '"' || line[p] == '*') continue;
    return strip_punct(line);
  }
  throw SdpError("SDPA: unexpected end of input");
}

}  // namespace

DenseSdp read_sdpa(std::istream& is) {
  long m = 0, nblocks = 0, r = 0;
  std::istringstream(next_data_line(is)) >> m;
  std::istringstream(next_data_line(is)) >> nblocks;
  if (nblocks != 1) throw SdpError("SDPA: only single-block problems are supported");
  std::istringstream(next_data_line(is)) >> r;
  if (m < 0 || r <= 0) throw SdpError("SDPA: bad dimensions");
  DenseSdp sdp;
  sdp.b.resize(m);
  {
    std::istringstream ls(next_data_line(is));
    for (long i = 0; i < m; ++i)
      if (!(ls >> sdp.b[i])) throw SdpError("SDPA: short objective vector");
    sdp.b = -sdp.b;
  }
  sdp.C = Eigen::MatrixXd::Zero(r, r);
  sdp.A.assign(m, Eigen::MatrixXd::Zero(r, r));
  std::string line;
  while (std::getline(is, line)) {
    line = strip_punct(line);
    std::istringstream ls(line);
    long mat, blk, i, j;
    double v;
    if (!(ls >> mat >> blk >> i >> j >> v)) continue;
    if (mat < 0 || mat > m || i < 1 || j < 1 || i > r || j > r) throw SdpError("SDPA: entry out of range");
    Eigen::MatrixXd& F = mat == 0 ? sdp.C : sdp.A[mat - 1];
    F(i - 1, j - 1) = F(j - 1, i - 1) = -v;
  }
  return sdp;
}

namespace {

std::vector<double> read_numbers_after(std::istream& is, const std::string& key, std::size_t count) {
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  auto pos = text.find(key);
  if (pos == std::string::npos) throw SdpError("SDPA result: missing section " + key);
  pos = text.find('=', pos);
  std::istringstream ls(strip_punct(text.substr(pos + 1)));
  std::vector<double> out(count);
  for (auto& v : out)
    if (!(ls >> v)) throw SdpError("SDPA result: short section " + key);
  return out;
}

Eigen::MatrixXd as_matrix(const std::vector<double>& v, Eigen::Index r) {
  Eigen::MatrixXd M(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) M(i, j) = v[static_cast<std::size_t>(i * r + j)];
  return M;
}

}  // namespace

SdpaSolution read_sdpa_solution(std::istream& is, Eigen::Index r) {
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  auto section = [&](const std::string&) { return std::istringstream(text); };
  SdpaSolution sol;
  {
    // xVec length is not known up front: read until the closing brace.
    auto pos = text.find("xVec");
    if (pos == std::string::npos) throw SdpError("SDPA result: missing section xVec");
    auto open = text.find('{', pos), close = text.find('}', pos);
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw SdpError("SDPA result: malformed xVec");
    std::istringstream ls(strip_punct(text.substr(open, close - open + 1)));
    std::vector<double> xs;
    double v;
    while (ls >> v) xs.push_back(v);
    sol.x = Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
  }
  const std::size_t rr = static_cast<std::size_t>(r * r);
  auto xs = section("xMat");
  sol.X = as_matrix(read_numbers_after(xs, "xMat", rr), r);
  auto ys = section("yMat");
  sol.Y = as_matrix(read_numbers_after(ys, "yMat", rr), r);
  return sol;
}

SdpBackend external_sdpa_backend(const std::string& command, const std::string& work_dir) {
  return [command, work_dir](const DenseSdp& sdp, const Eigen::MatrixXd&, const Eigen::VectorXd&,
                             const IpmOptions&) {
    static std::atomic<int> counter{0};
    namespace fs = std::filesystem;
    fs::path dir = work_dir.empty() ? fs::temp_directory_path() : fs::path(work_dir);
    std::string stem = "realvar_sdp_" + std::to_string(counter++);
    fs::path in = dir / (stem + ".dat-s");
    fs::path out = dir / (stem + ".out");
    {
      std::ofstream f(in);
      if (!f) throw SdpError("cannot write " + in.string());
      write_sdpa(f, sdp);
    }
    std::string cmd = command + " '" + in.string() + "' '" + out.string() + "'";
    int rc = std::system(cmd.c_str());
    if (rc != 0) throw SdpError("external SDP command failed (" + std::to_string(rc) + "): " + cmd);
    std::ifstream f(out);
    if (!f) throw SdpError("external SDP command produced no output file " + out.string());
    SdpaSolution s = read_sdpa_solution(f, sdp.C.rows());
    IpmResult res;
    res.y = s.x;
    res.Z = s.X;
    res.X = s.Y;
    res.primal_obj = sdp.C.cwiseProduct(res.X).sum();
    res.dual_obj = sdp.b.dot(res.y);
    res.gap = res.X.cwiseProduct(res.Z).sum();
    res.converged = true;
    std::error_code ec;
    fs::remove(in, ec);
    fs::remove(out, ec);
    return res;
  };
}

}  // namespace realvar
