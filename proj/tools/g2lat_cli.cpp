// g2lat: command-line front end.
//
// Exit codes: 0 success, 1 negative verdict, 2 input error, 3 internal limit
// (missing etale extension, precision exhausted, inconsistency).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2lat/io.hpp"

using namespace g2lat;

namespace {

struct Globals {
  std::string field = "F5";
  bool field_given = false;
  int precision = kDefaultPrecision;
  std::uint64_t seed = 1;
  int indent = 2;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text << "\n";
}

FieldId document_field(const Json& doc, const Globals& g) {
  FieldId f = field_of_document(doc);
  if (g.field_given && field_from_name(g.field) != f)
    throw InputError("--field " + g.field + " conflicts with the file's field " + field_name(f));
  return f;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct Output {
  Json json;
  int code = 0;
};

template <CoefficientField K>
Output classify(const Json& doc, bool reduce, const std::string& trace_path, const Globals& g) {
  auto L = lattice_from_json<K>(doc);
  auto cert = classify_vertex(L);
  Json out = certificate_to_json(cert);
  if (cert.type) {
    out["chain"] = chain_to_json(graded_chain(L, *cert.type));
    if (reduce) {
      auto r = reduce_lattice(L, g.precision);
      if (!r.g) throw Inconsistency("a vertex lattice did not reduce to a standard basis");
      out["transformer"] = map_to_json(*r.g);
      out["certificate_verified"] = certificate_verify(*r.g, L, *cert.type).ok;
      if (!trace_path.empty()) write_text_file(trace_path, trace_to_json(r.trace).dump(g.indent));
    }
    return {out, 0};
  }
  if (cert.dual_length == 2) {
    out["diagnostic"] = "split Gram profile with length 2 over the dual: no order has this profile";
    if (reduce && L.contains(Octonion<K>::para_unit())) {
      auto r = reduce_lattice(L, g.precision);
      if (r.refutation) out["refutation"] = refutation_to_json(*r.refutation);
      if (!trace_path.empty()) write_text_file(trace_path, trace_to_json(r.trace).dump(g.indent));
    }
  }
  return {out, 1};
}

template <CoefficientField K>
Output reduce(const Json& doc, const std::string& trace_path, const Globals& g) {
  auto L = lattice_from_json<K>(doc);
  auto r = reduce_lattice(L, g.precision);
  if (!trace_path.empty()) write_text_file(trace_path, trace_to_json(r.trace).dump(g.indent));
  if (r.refutation) return {Json{{"refutation", refutation_to_json(*r.refutation)}}, 1};
  Json out{{"type", to_string(*r.type)},
           {"precision", r.precision_used},
           {"basis", octonions_to_json(r.basis)},
           {"transformer", map_to_json(*r.g)},
           {"certificate_verified", certificate_verify(*r.g, L, *r.type).ok}};
  return {out, 0};
}

template <CoefficientField K>
Output chain(const Json& doc) {
  auto L = lattice_from_json<K>(doc);
  auto cert = classify_vertex(L);
  if (!cert.type) return {certificate_to_json(cert), 1};
  return {Json{{"type", to_string(*cert.type)}, {"chain", chain_to_json(graded_chain(L, *cert.type))}}, 0};
}

template <CoefficientField K>
Output triality(const std::vector<std::string>& vectors) {
  std::vector<Octonion<K>> xs;
  for (const auto& v : vectors) {
    auto parts = split_commas(v);
    if (parts.size() != 8) throw InputError("--vector needs 8 comma-separated scalars");
    Octonion<K> x;
    for (std::size_t i = 0; i < 8; ++i) x[i] = parse_scalar<K>(parts[i]);
    xs.push_back(x);
  }
  IsotropicSubspace<K> U(xs);
  auto [l, r] = triality_intersections(U);
  auto side = [](const IsotropicSubspace<K>& s) { return Json{{"rank", s.rank()}, {"basis", octonions_to_json(s.basis())}}; };
  Json out{{"field", field_to_json(field_id<K>())}, {"U", side(U)}, {"L_U", side(l)}, {"R_U", side(r)}};
  if (U.rank() == 1) {
    out["left_ideal"] = side(left_ideal(U.basis()[0]));
    out["right_ideal"] = side(right_ideal(U.basis()[0]));
  }
  return {out, 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices in the split octonions over k(t): classification, reduction, certificates"};
  app.require_subcommand(1);
  Globals g;
  auto* field_opt = app.add_option("--field", g.field, "coefficient field: F3, F5, F7, F11, F13 or Q")->capture_default_str();
  app.add_option("--precision", g.precision, "working t-adic precision")->capture_default_str()->check(CLI::Range(1, kMaxPrecision));
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--json-indent", g.indent, "JSON indentation (-1 for compact)")->capture_default_str();

  std::string in, with, map_path, trace_path, type_name;
  bool reduce_flag = false, corrupt = false;
  std::size_t samples = 500;
  int degree = 3, word_length = 4;
  std::vector<std::string> vectors;

  auto* c_classify = app.add_subcommand("classify", "vertex type of a lattice");
  c_classify->add_option("--in", in, "lattice file")->required();
  c_classify->add_flag("--reduce", reduce_flag, "also compute the certificate g");
  c_classify->add_option("--trace", trace_path, "write the reduction trace here");

  auto* c_reduce = app.add_subcommand("reduce", "standard basis and certificate, or a refutation");
  c_reduce->add_option("--in", in, "lattice file")->required();
  c_reduce->add_option("--trace", trace_path, "write the reduction trace here");

  auto* c_ident = app.add_subcommand("verify-identities", "randomized identity checks");
  c_ident->add_option("--samples", samples)->capture_default_str();
  c_ident->add_option("--degree", degree)->capture_default_str()->check(CLI::Range(0, 64));
  c_ident->add_flag("--corrupt-table", corrupt, "negate one structure constant (negative control)");

  auto* c_random = app.add_subcommand("random-lattice", "g * L_std(T) for a random automorphism g");
  c_random->add_option("--type", type_name, "1, 2 or 3")->required();
  c_random->add_option("--word-length", word_length)->capture_default_str()->check(CLI::Range(0, 64));

  auto* c_dual = app.add_subcommand("dual", "dual lattice");
  c_dual->add_option("--in", in, "lattice file")->required();

  auto* c_product = app.add_subcommand("product", "span of all products x * y");
  c_product->add_option("--in", in, "left lattice file")->required();
  c_product->add_option("--with", with, "right lattice file")->required();

  auto* c_chain = app.add_subcommand("chain", "graded lattice chain of a vertex");
  c_chain->add_option("--in", in, "lattice file")->required();

  auto* c_stab = app.add_subcommand("stabilizes", "whether an automorphism fixes a lattice");
  c_stab->add_option("--map", map_path, "map file")->required();
  c_stab->add_option("--in", in, "lattice file")->required();

  auto* c_tri = app.add_subcommand("triality", "intersections of the ideals of an isotropic subspace");
  c_tri->add_option("--vector", vectors, "8 comma-separated scalars; repeat for a subspace")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g.field_given = field_opt->count() > 0;

  try {
    Output out;
    if (c_classify->parsed()) {
      Json doc = read_json_file(in);
      out = with_field(document_field(doc, g), [&](auto k) { return classify<decltype(k)>(doc, reduce_flag, trace_path, g); });
    } else if (c_reduce->parsed()) {
      Json doc = read_json_file(in);
      out = with_field(document_field(doc, g), [&](auto k) { return reduce<decltype(k)>(doc, trace_path, g); });
    } else if (c_ident->parsed()) {
      FieldId f = field_from_name(g.field);
      out = with_field(f, [&](auto k) {
        using K = decltype(k);
        auto r = check_identities<K>(g.seed, samples, degree, corrupt ? corrupted_para_table() : para_table());
        return Output{identity_report_to_json(r, f), r.all_passed() ? 0 : 1};
      });
    } else if (c_random->parsed()) {
      auto t = vertex_type_from_string(type_name);
      if (!t) throw InputError("--type must be 1, 2 or 3");
      out = with_field(field_from_name(g.field), [&](auto k) {
        using K = decltype(k);
        return Output{lattice_to_json(random_lattice<K>(*t, g.seed, word_length)), 0};
      });
    } else if (c_dual->parsed()) {
      Json doc = read_json_file(in);
      out = with_field(document_field(doc, g), [&](auto k) {
        using K = decltype(k);
        return Output{lattice_to_json(lattice_from_json<K>(doc).dual()), 0};
      });
    } else if (c_product->parsed()) {
      Json a = read_json_file(in), b = read_json_file(with);
      FieldId f = document_field(a, g);
      if (document_field(b, g) != f) throw InputError("the two lattices are over different fields");
      out = with_field(f, [&](auto k) {
        using K = decltype(k);
        return Output{lattice_to_json(product_span(lattice_from_json<K>(a), lattice_from_json<K>(b))), 0};
      });
    } else if (c_chain->parsed()) {
      Json doc = read_json_file(in);
      out = with_field(document_field(doc, g), [&](auto k) { return chain<decltype(k)>(doc); });
    } else if (c_stab->parsed()) {
      Json m = read_json_file(map_path), doc = read_json_file(in);
      FieldId f = document_field(doc, g);
      if (document_field(m, g) != f) throw InputError("map and lattice are over different fields");
      out = with_field(f, [&](auto k) {
        using K = decltype(k);
        bool s = stabilizes(map_from_json<K>(m), lattice_from_json<K>(doc));
        return Output{Json{{"stabilizes", s}}, s ? 0 : 1};
      });
    } else if (c_tri->parsed()) {
      out = with_field(field_from_name(g.field), [&](auto k) { return triality<decltype(k)>(vectors); });
    }
    std::cout << out.json.dump(g.indent) << "\n";
    return out.code;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolated& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NeedsEtaleExtension& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 3;
  } catch (const Inconsistency& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 3;
  }
}
