#include "ppcd/io.hpp"

#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "ppcd/construct.hpp"

namespace ppcd {

namespace {

std::string option_string(const ChoiceSet& cs, const Profile& p) {
  std::string s;
  s.reserve(p.size());
  for (size_t r = 0; r < p.size(); ++r) s.push_back(cs.active[r] ? (p[r] ? '1' : '0') : '*');
  return s;
}

std::string fixed_levels_string(const ChoiceSet& cs) {
  std::string s;
  for (size_t r = 0; r < cs.active.size(); ++r)
    if (!cs.active[r]) s.push_back(cs.profiles.empty() ? '0' : (cs.profiles[0][r] ? '1' : '0'));
  return s;
}

template <typename T>
std::string join_tuples(const std::vector<T>& items) {
  std::string out;
  for (const auto& t : items) {
    if (!out.empty()) out += " ";
    if constexpr (std::is_same_v<T, std::pair<int, int>>) {
      out += std::to_string(t.first + 1) + "," + std::to_string(t.second + 1);
    } else {
      out += std::to_string(std::get<0>(t) + 1) + "," + std::to_string(std::get<1>(t) + 1) + "," +
             std::to_string(std::get<2>(t) + 1);
    }
  }
  return out;
}

}  // namespace

std::string render_certificate(const OptimalityCertificate& cert) {
  std::ostringstream out;
  out << "model " << model_name(cert.model) << "\n";
  out << "passed " << (cert.passed ? 1 : 0) << "\n";
  out << "trace " << cert.trace.str() << "\n";
  out << "trace_bound " << cert.trace_bound.str() << "\n";
  out << "trace_max " << (cert.trace_max ? 1 : 0) << "\n";
  out << "connected " << (cert.connected ? 1 : 0) << "\n";
  out << "unbalanced_eta1 " << join_tuples(cert.unbalanced_eta1) << "\n";
  out << "bad_nph " << join_tuples(cert.bad_nph) << "\n";
  if (cert.model == Model::Broader) {
    out << "unbalanced_eta2 " << join_tuples(cert.unbalanced_eta2) << "\n";
    out << "unbalanced_eta3 " << join_tuples(cert.unbalanced_eta3) << "\n";
  }
  return out.str();
}

std::string write_design_file(const PartialDesign& d, Model model,
                              const std::optional<OptimalityCertificate>& cert) {
  std::ostringstream out;
  out << "ppcd-design 1\n";
  out << "n " << d.params.n << "\n";
  out << "m " << d.params.m << "\n";
  out << "rho " << d.params.rho << "\n";
  out << "N " << d.params.N << "\n";
  out << "model " << model_name(model) << "\n";
  for (const auto& cs : d.sets) {
    out << "set\n";
    for (const auto& prof : cs.profiles) out << option_string(cs, prof) << "\n";
    auto fixed = fixed_levels_string(cs);
    if (!fixed.empty()) out << "fixed " << fixed << "\n";
    out << "endset\n";
  }
  if (cert) {
    out << "certificate\n" << render_certificate(*cert) << "endcertificate\n";
  }
  return out.str();
}

PartialDesign parse_design_file(std::istream& in, Model* model_out) {
  PartialDesign d;
  Model model = Model::Main;
  std::string line;
  int lineno = 0;
  bool have_magic = false;
  int header_seen = 0;

  auto next = [&](std::string& out) {
    if (!std::getline(in, out)) return false;
    ++lineno;
    return true;
  };

  while (next(line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (!have_magic) {
      int version = 0;
      ls >> version;
      if (kw != "ppcd-design" || version != 1)
        throw ParseError(lineno, 0, "expected header 'ppcd-design 1'");
      have_magic = true;
      continue;
    }
    if (kw == "n" || kw == "m" || kw == "rho" || kw == "N") {
      int value = 0;
      ls >> value;
      if (ls.fail()) throw ParseError(lineno, 0, "expected an integer after '" + kw + "'");
      if (kw == "n") d.params.n = value;
      else if (kw == "m") d.params.m = value;
      else if (kw == "rho") d.params.rho = value;
      else d.params.N = value;
      ++header_seen;
    } else if (kw == "model") {
      std::string name;
      ls >> name;
      if (name == "main") model = Model::Main;
      else if (name == "broader") model = Model::Broader;
      else throw ParseError(lineno, 0, "model must be 'main' or 'broader'");
    } else if (kw == "set") {
      if (header_seen < 4) throw ParseError(lineno, 0, "'set' before complete header");
      ChoiceSet cs;
      cs.active.assign(d.params.n, 1);
      std::vector<std::string> options;
      std::string fixed;
      while (true) {
        if (!next(line)) throw ParseError(lineno, 0, "unexpected end of file inside 'set'");
        if (line == "endset") break;
        std::istringstream ss(line);
        std::string first;
        ss >> first;
        if (first == "fixed") {
          ss >> fixed;
        } else {
          if (static_cast<int>(first.size()) != d.params.n)
            throw ParseError(lineno, static_cast<int>(first.size()) + 1,
                             "option string must have length n = " + std::to_string(d.params.n));
          for (size_t i = 0; i < first.size(); ++i)
            if (first[i] != '0' && first[i] != '1' && first[i] != '*')
              throw ParseError(lineno, static_cast<int>(i) + 1,
                               "option characters must be '0', '1' or '*'");
          options.push_back(first);
        }
      }
      if (options.empty()) throw ParseError(lineno, 0, "choice set has no options");
      // '*' positions must agree across the options of a set
      for (int r = 0; r < d.params.n; ++r) {
        bool star = options[0][r] == '*';
        for (const auto& o : options)
          if ((o[r] == '*') != star)
            throw ParseError(lineno, r + 1, "'*' positions differ between options of one set");
        cs.active[r] = star ? 0 : 1;
      }
      size_t stars = 0;
      for (int r = 0; r < d.params.n; ++r) stars += cs.active[r] ? 0 : 1;
      if (stars > 0 && fixed.size() != stars)
        throw ParseError(lineno, 0, "'fixed' must give one level per '*' column (expected " +
                                        std::to_string(stars) + ")");
      for (const auto& o : options) {
        Profile p(d.params.n);
        size_t fi = 0;
        for (int r = 0; r < d.params.n; ++r) {
          if (o[r] == '*') {
            char c = fixed[fi++];
            if (c != '0' && c != '1') throw ParseError(lineno, 0, "'fixed' levels must be 0 or 1");
            p[r] = static_cast<std::uint8_t>(c - '0');
          } else {
            p[r] = static_cast<std::uint8_t>(o[r] - '0');
          }
        }
        cs.profiles.push_back(std::move(p));
      }
      d.sets.push_back(std::move(cs));
    } else if (kw == "certificate") {
      bool closed = false;
      while (next(line))
        if (line == "endcertificate") {
          closed = true;
          break;
        }
      if (!closed) throw ParseError(lineno, 0, "unterminated certificate block");
    } else {
      throw ParseError(lineno, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_magic) throw ParseError(lineno, 0, "empty file: expected 'ppcd-design 1'");
  if (header_seen < 4) throw ParseError(lineno, 0, "incomplete header: need n, m, rho and N");
  if (static_cast<int>(d.sets.size()) != d.params.N)
    throw ParseError(lineno, 0, "file has " + std::to_string(d.sets.size()) +
                                    " sets but header says N = " + std::to_string(d.params.N));
  if (model_out) *model_out = model;
  return d;
}

PartialDesign parse_design_path(const std::string& path, Model* model_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open design file: " + path);
  return parse_design_file(in, model_out);
}

std::string export_csv(const PartialDesign& d) {
  std::ostringstream out;
  out << "set,option";
  for (int r = 1; r <= d.params.n; ++r) out << ",f" << r;
  out << ",active_mask\n";
  for (size_t p = 0; p < d.sets.size(); ++p) {
    const auto& cs = d.sets[p];
    std::string mask;
    for (auto a : cs.active) mask.push_back(a ? '1' : '0');
    for (size_t i = 0; i < cs.profiles.size(); ++i) {
      out << (p + 1) << "," << (i + 1);
      for (int r = 0; r < d.params.n; ++r) out << "," << static_cast<int>(cs.profiles[i][r]);
      out << "," << mask << "\n";
    }
  }
  return out.str();
}

namespace {

std::string plan_cell(const ConstructionPlan& plan) {
  if (!plan.plannable) return "-";
  std::string cell = std::to_string(plan.N);
  switch (plan.method) {
    case Method::SaturatedW:
      cell += ",W";
      break;
    case Method::MethodW:
      if (plan.N1 < plan.N2) cell += "*";
      cell += ",W(" + std::to_string(plan.nu) + "," + std::to_string(plan.rho) + ")";
      break;
    case Method::MethodH:
      cell += ",H" + std::to_string(plan.h);
      break;
  }
  return cell;
}

}  // namespace

std::string render_table1(const Catalog& cat) {
  std::ostringstream out;
  out << "Table 1: minimum choice sets N for an optimal paired design ('*': Method-W beats Method-H)\n";
  out << std::left << std::setw(6) << "rho\\n";
  for (int n = 3; n <= 15; ++n) out << std::setw(12) << n;
  out << "\n";
  for (int rho = 2; rho <= 6; ++rho) {
    out << std::setw(6) << rho;
    for (int n = 3; n <= 15; ++n) {
      std::string cell = n > rho ? plan_cell(plan_minimum_N(cat, n, rho)) : "-";
      out << std::setw(12) << cell;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_table2(const Catalog& cat) {
  std::vector<ConstructionPlan> improved;
  for (int rho = 2; rho <= 6; ++rho)
    for (int n = rho + 1; n <= 15; ++n) {
      auto plan = plan_minimum_N(cat, n, rho);
      if (plan.plannable && plan.method == Method::MethodW && plan.N1 < plan.N2)
        improved.push_back(plan);
    }
  std::ostringstream out;
  out << "Table 2: improved cases using Method-W\n";
  out << std::left << std::setw(10) << "(rho,n)";
  for (const auto& p : improved)
    out << std::setw(9) << ("(" + std::to_string(p.rho) + "," + std::to_string(p.n) + ")");
  out << "\n" << std::setw(10) << "Method-H";
  for (const auto& p : improved) out << std::setw(9) << p.N2;
  out << "\n" << std::setw(10) << "Method-W";
  for (const auto& p : improved) out << std::setw(9) << p.N1;
  out << "\n";
  return out.str();
}

}  // namespace ppcd
