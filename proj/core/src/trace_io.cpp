#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "ga3ph/errors.hpp"
#include "ga3ph/sim.hpp"

namespace ga3ph {

namespace {

constexpr const char* kHeader =
    "t,ref_alpha,ref_beta,y_alpha,y_beta,u_alpha,u_beta,va,vb,vc";

void put(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void write_csv(const SimTrace& trace, std::ostream& os) {
  os << kHeader << "\n";
  for (size_t k = 0; k < trace.size(); ++k) {
    const double row[10] = {trace.t[k],      trace.ref_alpha[k], trace.ref_beta[k],
                            trace.y_alpha[k], trace.y_beta[k],    trace.u_alpha[k],
                            trace.u_beta[k],  trace.va[k],        trace.vb[k],
                            trace.vc[k]};
    for (int c = 0; c < 10; ++c) {
      if (c) os << ',';
      put(os, row[c]);
    }
    os << '\n';
  }
}

SimTrace read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty trace CSV", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw ParseError("unexpected trace CSV header", 1);

  SimTrace tr;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    double v[10];
    char comma;
    for (int c = 0; c < 10; ++c) {
      if (c && !(row >> comma))
        throw ParseError("short trace row at line " + std::to_string(lineno), lineno);
      if (!(row >> v[c]))
        throw ParseError("bad number in trace row at line " + std::to_string(lineno),
                         lineno);
    }
    tr.t.push_back(v[0]);
    tr.ref_alpha.push_back(v[1]);
    tr.ref_beta.push_back(v[2]);
    tr.y_alpha.push_back(v[3]);
    tr.y_beta.push_back(v[4]);
    tr.u_alpha.push_back(v[5]);
    tr.u_beta.push_back(v[6]);
    tr.va.push_back(v[7]);
    tr.vb.push_back(v[8]);
    tr.vc.push_back(v[9]);
  }
  return tr;
}

}  // namespace ga3ph
