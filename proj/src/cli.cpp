#include "realiz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <iterator>
#include <sstream>

#include "realiz/class_text.hpp"
#include "realiz/classification.hpp"
#include "realiz/constructions.hpp"
#include "realiz/errors.hpp"
#include "realiz/obstructions.hpp"
#include "realiz/stability.hpp"

namespace realiz::cli {

using Json = nlohmann::ordered_json;

const char* grammar_help() {
  return "class grammar:   term (\" + \" term)*, term := coeff \"*s\" partition | \"s\" partition\n"
         "                 e.g. 2*s[3,1] + s[2,2]; the zero class is 0\n"
         "product grammar: 2*(s[2,1]|s[1]) + (s[]|s[2]), one slot per factor\n"
         "mult input:      factors separated by \" * \", e.g. s[1] * s[1]\n";
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error("expected a comma-separated integer list, got '" + text + "'");
    }
    if (used != item.size()) throw Error("expected a comma-separated integer list, got '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

GrassmannianSpec parse_space(const std::string& text) {
  std::vector<int> kn = parse_ints(text);
  if (kn.size() != 2) throw Error("expected k,n but got '" + text + "'");
  return {kn[0], kn[1]};
}

Ring parse_ring(const std::string& text) {
  if (text == "Z") return Ring::Z;
  if (text == "Q") return Ring::Q;
  throw Error("ring must be Z or Q");
}

Json space_json(const GrassmannianSpec& g) { return Json::array({g.k(), g.n()}); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return Json(q.get_str());
}

Json witness_json(const ObstructionWitness& w) {
  Json factors = Json::array();
  for (const auto& f : w.span.factors().factors()) factors.push_back(space_json(f));
  Json alpha = Json::array();
  for (const auto& p : w.alpha) alpha.push_back("s" + p.str());
  Json matrix = Json::array();
  for (const auto& row : w.matrix.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    matrix.push_back(r);
  }
  Json out;
  out["target"] = space_json(w.span.target());
  out["s"] = w.s;
  out["t"] = w.t;
  out["factors"] = factors;
  out["alpha"] = alpha;
  out["matrix"] = matrix;
  out["eigen_sign_pattern"] = w.signs.str();
  out["reason"] = w.reason;
  return out;
}

std::string trim(std::string s) {
  auto ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::vector<std::string> split_factors(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = text.find(" * ", start);
    out.push_back(text.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return out;
    start = at + 3;
  }
}

std::string error_type(const std::exception& e) {
#define REALIZ_ERROR_NAME(Name) \
  if (dynamic_cast<const Name*>(&e)) return #Name;
  REALIZ_ERROR_NAME(InvalidPartition)
  REALIZ_ERROR_NAME(NotAPartition)
  REALIZ_ERROR_NAME(InvalidSpace)
  REALIZ_ERROR_NAME(SpaceMismatch)
  REALIZ_ERROR_NAME(SpecMismatch)
  REALIZ_ERROR_NAME(DegreeMismatch)
  REALIZ_ERROR_NAME(NotHomogeneous)
  REALIZ_ERROR_NAME(ZeroClass)
  REALIZ_ERROR_NAME(Unreachable)
  REALIZ_ERROR_NAME(NotStrict)
  REALIZ_ERROR_NAME(ExponentOutOfRange)
  REALIZ_ERROR_NAME(NotSymmetric)
#undef REALIZ_ERROR_NAME
  return "Error";
}

struct Options {
  std::string space;
  std::string ring = "Z";
  std::string class_text;
  bool class_given = false;
  bool oracle = false;
  bool search = false;
  int r = 0;
  std::string conv = "codim";
  std::string target;
  std::string i_list;
  std::string j_list;
  int cone = 0;
  int m = -1;
  std::string face;
  int weight = -1;
  int part_limit = 0;
  SearchBudget budget;
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  std::string input() {
    if (opt_.class_given) return opt_.class_text;
    std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
    return trim(all);
  }

  GrassmannianSpec space() const {
    if (opt_.space.empty()) throw Error("--g k,n is required");
    return parse_space(opt_.space);
  }

  Json header(const std::string& verb) {
    Json j;
    j["schema"] = 1;
    j["verb"] = verb;
    return j;
  }

  int mult(Json& j) {
    const GrassmannianSpec g = space();
    CohomologyClass acc = CohomologyClass::unit(g);
    for (const auto& factor : split_factors(input())) {
      CohomologyClass next = parse_class(factor, g);
      acc = opt_.oracle ? oracle_multiply(acc, next) : multiply(acc, next);
    }
    j["space"] = space_json(g);
    j["result"] = format_class(acc);
    return 0;
  }

  int integrate_cmd(Json& j) {
    const GrassmannianSpec g = space();
    j["space"] = space_json(g);
    j["result"] = integer_json(integrate(parse_class(input(), g)));
    return 0;
  }

  int dual(Json& j) {
    CohomologyClass c = transpose_class(parse_class(input(), space()));
    j["space"] = space_json(c.space());
    j["result"] = format_class(c);
    return 0;
  }

  int complement_cmd(Json& j) {
    CohomologyClass c = complement_class(parse_class(input(), space()));
    j["space"] = space_json(c.space());
    j["result"] = format_class(c);
    return 0;
  }

  int realizable(Json& j) {
    const GrassmannianSpec g = space();
    const Ring ring = parse_ring(opt_.ring);
    RealizabilityOptions ro;
    ro.search = opt_.search;
    ro.budget = opt_.budget;
    RealizabilityVerdict v = realizability(parse_class(input(), g), ring, ro);
    j["space"] = space_json(g);
    j["ring"] = to_string(ring);
    j["status"] = to_string(v.status);
    j["citation"] = v.citation;
    if (!v.notes.empty()) j["notes"] = v.notes;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    return v.status == Status::NotRealizable ? 2 : 0;
  }

  int construct(Json& j) {
    const std::string text = input();
    if (opt_.cone > 0) {
      ProductClass c = parse_product_class(text, cone_source(opt_.cone));
      int m = opt_.m;
      if (m < 0) {
        if (c.is_zero()) throw Error("--m is required for the zero class");
        m = c.codimension().value_or(-1);
      }
      CohomologyClass out = cone_class_map(opt_.cone, m, c);
      j["construction"] = "cone";
      j["source"] = cone_source(opt_.cone).str();
      j["space"] = space_json(out.space());
      j["result"] = format_class(out);
      return 0;
    }
    if (opt_.target.empty()) throw Error("--target k,n is required");
    const GrassmannianSpec g = parse_space(opt_.target);
    if (!opt_.face.empty()) {
      // Accept both "[2,1]" and "2,1".
      const Partition lambda =
          parse_partition(opt_.face.find('[') == std::string::npos ? "[" + opt_.face + "]" : opt_.face);
      ProductClass c = parse_product_class(text, face_source(lambda, g));
      j["construction"] = "face";
      j["source"] = face_source(lambda, g).str();
      j["space"] = space_json(g);
      j["result"] = format_class(face_class_map(lambda, g, c));
      return 0;
    }
    if (opt_.i_list.empty() || opt_.j_list.empty()) throw Error("--i and --j are required");
    IteratedSpec spec(g, parse_ints(opt_.i_list), parse_ints(opt_.j_list));
    ProductClass c = parse_product_class(text, spec.source());
    j["construction"] = spec.steps() == 1 ? "bundle" : "iterated";
    j["source"] = spec.source().str();
    j["space"] = space_json(g);
    j["result"] = format_class(iterated_class_map(spec, c));
    return 0;
  }

  int reduce(Json& j) {
    const GrassmannianSpec g = space();
    const Ring ring = parse_ring(opt_.ring);
    if (opt_.conv != "codim" && opt_.conv != "dim") throw Error("--conv must be codim or dim");
    const bool codim = opt_.conv == "codim";
    std::optional<CohomologyClass> c;
    int r = opt_.r;
    if (opt_.class_given) {
      c = parse_class(opt_.class_text, g);
      if (!c->is_homogeneous() || c->is_zero()) throw NotHomogeneous("reduce needs a nonzero homogeneous class");
      const int degree = codim ? *c->codimension() : *c->dimension();
      if (r == 0) r = degree;
      if (r != degree) throw DegreeMismatch("--r disagrees with the class degree");
    }
    if (r < 1) throw Error("--r is required");
    const Convention conv = codim ? Convention::codim(r) : Convention::dim(r);
    const GrassmannianSpec t = canonical_instance(r, g, ring, conv);
    j["canonical"] = space_json(t);
    if (c) {
      CohomologyClass out(t);
      for (const auto& [lambda, coeff] : c->terms())
        out.add(codim ? lambda : complement(complement(lambda, g), t), coeff);
      j["class"] = format_class(out);
    }
    return 0;
  }

  int obstruct(Json& j) {
    const GrassmannianSpec g = space();
    CohomologyClass c = parse_class(input(), g);
    if (!c.is_homogeneous()) throw NotHomogeneous("obstruction search needs a homogeneous class");
    auto w = search_obstruction(c, opt_.budget);
    j["space"] = space_json(g);
    j["witness"] = w ? witness_json(*w) : Json(nullptr);
    return w ? 2 : 0;
  }

  int enumerate(Json& j) {
    const GrassmannianSpec g = space();
    Json parts = Json::array();
    const auto list = opt_.weight >= 0 ? enumerate_lambda(opt_.weight, g) : box_partitions(g);
    for (const auto& p : list) parts.push_back(p.str());
    j["space"] = space_json(g);
    if (opt_.weight >= 0) j["weight"] = opt_.weight;
    j["count"] = parts.size();
    j["partitions"] = parts;
    return 0;
  }

 private:
  const Options& opt_;
  std::istream& in_;
};

}  // namespace

Result run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Schubert calculus and realizability of Grassmannian cohomology classes", "realiz"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--part-limit", opt.part_limit, "largest admissible partition part");

  auto add_space = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--g", opt.space, "ambient Grassmannian as k,n");
    if (required) o->required();
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", opt.class_text, "class text (default: standard input)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-factors", opt.budget.max_factors, "largest number of span factors");
    sub->add_option("--max-rank", opt.budget.max_rank_extension, "largest rank extension t");
    sub->add_option("--max-corank", opt.budget.max_corank_extension, "largest corank extension s");
    sub->add_option("--max-alpha", opt.budget.max_alpha, "multipliers tried per span map");
  };

  CLI::App* mult = app.add_subcommand("mult", "multiply classes separated by ' * '");
  add_space(mult, true);
  add_class(mult);
  mult->add_flag("--oracle", opt.oracle, "use the Giambelli-Pieri route");
  CLI::App* integ = app.add_subcommand("integrate", "degree of the top-class coefficient");
  add_space(integ, true);
  add_class(integ);
  CLI::App* dual = app.add_subcommand("dual", "image under G(k,n) -> G(n-k,n)");
  add_space(dual, true);
  add_class(dual);
  CLI::App* comp = app.add_subcommand("complement", "reindex every key by its complement");
  add_space(comp, true);
  add_class(comp);
  CLI::App* real = app.add_subcommand("realizable", "realizability verdict");
  add_space(real, true);
  add_class(real);
  real->add_option("--ring", opt.ring, "Z or Q");
  real->add_flag("--search", opt.search, "search Hodge obstructions when no theorem applies");
  add_budget(real);
  CLI::App* cons = app.add_subcommand("construct", "class map of a construction");
  add_class(cons);
  cons->add_option("--target", opt.target, "target Grassmannian as k,n");
  cons->add_option("--i", opt.i_list, "i_1,...,i_s");
  cons->add_option("--j", opt.j_list, "j_1,...,j_s");
  cons->add_option("--cone", opt.cone, "cone over P^n x P^n");
  cons->add_option("--m", opt.m, "codimension of the cone input");
  cons->add_option("--face", opt.face, "strict partition of the face");
  CLI::App* red = app.add_subcommand("reduce", "canonical instance");
  add_space(red, true);
  red->add_option("--r", opt.r, "degree");
  red->add_option("--ring", opt.ring, "Z or Q");
  red->add_option("--conv", opt.conv, "codim or dim");
  add_class(red);
  CLI::App* obs = app.add_subcommand("obstruct", "search a Hodge index obstruction");
  add_space(obs, true);
  add_class(obs);
  add_budget(obs);
  CLI::App* en = app.add_subcommand("enumerate", "partitions in the box");
  add_space(en, true);
  en->add_option("--r", opt.weight, "weight");

  std::vector<const char*> argv{"realiz"};
  for (const auto& a : args) argv.push_back(a.c_str());

  Result result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n" + grammar_help();
    result.exit_code = 1;
    return result;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  opt.class_given = sub->get_option_no_throw("--class") && sub->count("--class") > 0;

  Runner runner(opt, in);
  Json j = runner.header(verb);
  try {
    if (opt.part_limit > 0) set_part_limit(opt.part_limit);
    if (verb == "mult") result.exit_code = runner.mult(j);
    else if (verb == "integrate") result.exit_code = runner.integrate_cmd(j);
    else if (verb == "dual") result.exit_code = runner.dual(j);
    else if (verb == "complement") result.exit_code = runner.complement_cmd(j);
    else if (verb == "realizable") result.exit_code = runner.realizable(j);
    else if (verb == "construct") result.exit_code = runner.construct(j);
    else if (verb == "reduce") result.exit_code = runner.reduce(j);
    else if (verb == "obstruct") result.exit_code = runner.obstruct(j);
    else result.exit_code = runner.enumerate(j);
  } catch (const SyntaxError& e) {
    j = runner.header(verb);
    j["error"] = {{"type", "SyntaxError"}, {"message", e.what()}, {"position", e.position()}};
    result.err = std::string(e.what()) + "\n" + grammar_help();
    result.exit_code = 1;
  } catch (const std::exception& e) {
    j = runner.header(verb);
    j["error"] = {{"type", error_type(e)}, {"message", e.what()}};
    result.err = e.what();
    result.exit_code = 1;
  }
  result.out = j.dump() + "\n";
  return result;
}

}  // namespace realiz::cli
