#include <sstream>

#include "coclass/catalog.hpp"
#include "coclass/errors.hpp"

namespace coclass {

namespace {

void check_range(const char* name, int v) {
  if (v < -1 || v > 1) {
    throw UnsupportedParams(std::string("parameter ") + name + " = " + std::to_string(v) +
                            " is outside {-1,0,1}");
  }
}

// "name^e" with zero exponents dropped; empty when nothing remains.
std::string factor(const std::string& name, int e) {
  if (e == 0 || name.empty()) return {};
  return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string product(std::initializer_list<std::string> factors) {
  std::string out;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!out.empty()) out += ' ';
    out += f;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string parametrized_presentation_text(const PresentationParams& p) {
  if (p.r < 2 || p.c < p.r + 1) {
    throw UnsupportedParams("family needs r >= 2 and c >= r+1, got c=" +
                            std::to_string(p.c) + " r=" + std::to_string(p.r));
  }
  if (p.c > 8) throw UnsupportedParams("class above 8 exceeds the order bound");
  check_range("alpha", p.alpha);
  check_range("beta", p.beta);
  check_range("gamma", p.gamma);
  check_range("delta", p.delta);
  check_range("rho", p.rho);

  const auto s = [](int j) { return "s" + std::to_string(j); };
  const auto t = [](int j) { return "t" + std::to_string(j); };
  const auto sg = [](int j) { return "sg" + std::to_string(j); };
  const auto ta = [](int j) { return "ta" + std::to_string(j); };
  // sigma_2 does not exist; for c = 3 its factor drops out.
  const std::string sg_cm1 = p.c - 1 >= 3 ? sg(p.c - 1) : std::string();

  std::ostringstream out;
  out << "# family c=" << p.c << " r=" << p.r << " alpha=" << p.alpha
      << " beta=" << p.beta << " gamma=" << p.gamma << " delta=" << p.delta
      << " rho=" << p.rho << "\n";
  out << "gens x y\n";
  out << "let s2 = [y,x]\n";
  for (int j = 3; j <= p.c + 1; ++j) out << "let " << s(j) << " = [" << s(j - 1) << ",x]\n";
  out << "let t2 = s2\n";
  for (int j = 3; j <= p.r + 3; ++j) out << "let " << t(j) << " = [" << t(j - 1) << ",y]\n";
  out << "let sg3 = y^3\n";
  for (int j = 4; j <= p.c + 1; ++j) out << "let " << sg(j) << " = [" << sg(j - 1) << ",x]\n";
  out << "let ta3 = x^3\n";
  for (int j = 4; j <= p.r + 3; ++j) out << "let " << ta(j) << " = [" << ta(j - 1) << ",y]\n";
  out << s(p.c + 1) << "\n" << sg(p.c + 1) << "\n" << t(p.r + 3) << "\n" << ta(p.r + 3) << "\n";
  const int rb = p.rho * p.beta;
  const int rd = p.rho * p.delta;
  out << "s2^3 = " << product({"sg4", factor(sg(p.c), -rb), "ta4^-1"}) << "\n";
  out << "s3 sg3 sg4 = "
      << product({factor(sg_cm1, rb), factor(sg(p.c), p.gamma), factor(ta(p.r + 1), p.delta)})
      << "\n";
  out << "t3^-1 ta3 ta4 = "
      << product({factor(sg_cm1, rd), factor(sg(p.c), p.alpha), factor(ta(p.r + 1), p.beta)})
      << "\n";
  out << ta(p.r + 2) << " = " << product({factor(sg(p.c), -p.rho)}) << "\n";
  return out.str();
}

Presentation parametrized_presentation(const PresentationParams& p) {
  return parse_presentation(parametrized_presentation_text(p));
}

}  // namespace coclass
