#include "cbred/cli.hpp"

#include "cbred/characters.hpp"
#include "cbred/divisor.hpp"
#include "cbred/json_io.hpp"
#include "cbred/polytope.hpp"
#include "cbred/reduction.hpp"
#include "cbred/verlinde.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace cbred {

namespace {

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::domain_error("empty coordinate in list: \"" + s + "\"");
    out.push_back(std::stol(tok));
  }
  return out;
}

std::vector<std::string> split_semicolons(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

std::vector<WVec> parse_weights(const std::string& s) {
  std::vector<WVec> out;
  for (const std::string& part : split_semicolons(s)) out.push_back(parse_long_list(part));
  return out;
}

std::vector<std::vector<int>> parse_cells(const std::string& s) {
  std::vector<std::vector<int>> out;
  for (const std::string& part : split_semicolons(s)) {
    std::vector<int> cell;
    for (long v : parse_long_list(part)) cell.push_back(static_cast<int>(v));
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<WeylElement> parse_words(const std::string& s) {
  std::vector<WeylElement> out;
  for (const std::string& part : split_semicolons(s)) {
    WeylElement w;
    if (!part.empty())
      for (long v : parse_long_list(part)) w.word.push_back(static_cast<int>(v) - 1);
    out.push_back(std::move(w));
  }
  return out;
}

std::string weight_str(const WVec& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

std::string qvec_str(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

struct FaceOptions {
  std::string grassmannian;
  std::string cells;
  std::string words;
  int parabolic = 0;
  long degree = -1;
};

void add_face_options(CLI::App* cmd, FaceOptions& fo) {
  cmd->add_option("--grassmannian", fo.grassmannian, "k,n for type-A Schubert cells");
  cmd->add_option("--cells", fo.cells, "Schubert cells as subsets, e.g. \"2,3;3,4\"");
  cmd->add_option("--words", fo.words, "Weyl words (1-based letters), e.g. \"1,2;;3\"");
  cmd->add_option("--parabolic", fo.parabolic, "omitted node (1-based) when using --words");
  cmd->add_option("--degree", fo.degree, "face degree d");
}

FaceSpec build_face(const RootSystem& rs, const FaceOptions& fo) {
  if (!fo.cells.empty()) {
    int k;
    if (!fo.grassmannian.empty()) {
      auto kn = parse_long_list(fo.grassmannian);
      if (kn.size() != 2) throw std::domain_error("--grassmannian expects \"k,n\"");
      if (kn[1] != rs.rank + 1)
        throw std::domain_error("--grassmannian n must equal rank+1 of the algebra");
      k = static_cast<int>(kn[0]);
    } else if (fo.parabolic > 0) {
      k = fo.parabolic;
    } else {
      throw std::domain_error("--cells requires --grassmannian or --parabolic");
    }
    FaceSpec face = face_from_subsets(rs, k, parse_cells(fo.cells));
    if (fo.degree >= 0 && fo.degree != face.degree)
      throw std::domain_error("--degree " + std::to_string(fo.degree) +
                              " does not match the certified product degree " +
                              std::to_string(face.degree));
    return face;
  }
  if (!fo.words.empty() || fo.parabolic > 0) {
    if (fo.parabolic <= 0) throw std::domain_error("--words requires --parabolic");
    if (fo.degree < 0) throw std::domain_error("--words requires an explicit --degree");
    return face_from_words(rs, fo.parabolic, parse_words(fo.words), fo.degree);
  }
  throw std::domain_error("no face specified: use --cells or --words");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact conformal-block ranks, eigenvalue-polytope faces, and rank factorizations"};
  app.require_subcommand(1);

  std::string algebra, weights_arg;
  long level = 1;
  bool json = false, force = false, oracle = false;

  auto add_common = [&](CLI::App* cmd, bool with_level) {
    cmd->add_option("--algebra", algebra, "simple type, e.g. A3")->required();
    cmd->add_option("--weights", weights_arg,
                    "semicolon-separated weights in fundamental-weight coordinates")
        ->required();
    if (with_level) cmd->add_option("--level", level, "level")->required();
    cmd->add_flag("--json", json, "machine-readable output");
  };

  CLI::App* rank_cmd = app.add_subcommand("rank", "genus-zero conformal-block rank");
  add_common(rank_cmd, true);
  rank_cmd->add_flag("--oracle-crosscheck", oracle, "require Verlinde-oracle agreement");

  CLI::App* inv_cmd = app.add_subcommand("invariants", "classical invariant dimension");
  inv_cmd->add_option("--algebra", algebra)->required();
  inv_cmd->add_option("--weights", weights_arg)->required();
  inv_cmd->add_flag("--json", json);

  CLI::App* alcove_cmd = app.add_subcommand("alcove", "alcove points kappa(lambda)/l");
  add_common(alcove_cmd, true);

  FaceOptions fo;
  CLI::App* face_cmd = app.add_subcommand("face-check", "evaluate a TW-face inequality");
  add_common(face_cmd, true);
  add_face_options(face_cmd, fo);

  long pts = 0, dmax = 0;
  std::string grass_arg;
  CLI::App* faces_cmd = app.add_subcommand("faces", "enumerate certified TW-faces of Gr(k,n)");
  faces_cmd->add_option("--grassmannian", grass_arg, "k,n")->required();
  faces_cmd->add_option("--points", pts, "number of marked points")->required();
  faces_cmd->add_option("--dmax", dmax, "maximal degree")->required();
  faces_cmd->add_flag("--json", json);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduced weight data on the Levi factors");
  add_common(reduce_cmd, true);
  add_face_options(reduce_cmd, fo);
  reduce_cmd->add_flag("--force", force, "proceed even if the data is off the face");

  CLI::App* verify_cmd = app.add_subcommand("verify", "rank factorization on a face");
  add_common(verify_cmd, true);
  add_face_options(verify_cmd, fo);
  verify_cmd->add_flag("--force", force);

  CLI::App* div_cmd = app.add_subcommand("divisor", "symmetrized divisor class");
  add_common(div_cmd, true);

  CLI::App* rel_cmd = app.add_subcommand("relation", "degree-zero divisor relation");
  add_common(rel_cmd, true);
  add_face_options(rel_cmd, fo);
  rel_cmd->add_flag("--force", force);

  std::vector<const char*> argv{"cbred"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (rank_cmd->parsed()) {
      auto rs = std::make_shared<const RootSystem>(parse_root_system(algebra));
      WeightData wd = make_weight_data(rs, parse_weights(weights_arg), level);
      auto ctx = shared_context(*rs, level);
      RankReport rep = rank_genus0(*ctx, wd.weights);
      if (oracle) {
        Int check = verlinde_rank_oracle(*ctx, wd.weights);
        if (check != rep.rank)
          throw std::logic_error("oracle crosscheck failed: fusion rank " + rep.rank.get_str() +
                                 " vs Verlinde " + check.get_str());
      }
      if (json) {
        nlohmann::json j{{"algebra", rep.algebra}, {"level", rep.level},
                         {"weights", rep.weights}, {"rank", json_int(rep.rank)}};
        out << j.dump() << "\n";
      } else {
        out << "rank(" << rep.algebra << ", level " << rep.level << ") = " << rep.rank.get_str()
            << "\n";
      }
      return 0;
    }

    if (inv_cmd->parsed()) {
      RootSystem rs = parse_root_system(algebra);
      std::vector<WVec> lambdas = parse_weights(weights_arg);
      Int dim = invariant_dimension(rs, lambdas);
      if (json) {
        nlohmann::json j{{"algebra", rs.name()}, {"weights", lambdas},
                         {"invariant_dimension", json_int(dim)}};
        out << j.dump() << "\n";
      } else {
        out << "invariant dimension = " << dim.get_str() << "\n";
      }
      return 0;
    }

    if (alcove_cmd->parsed()) {
      auto rs = std::make_shared<const RootSystem>(parse_root_system(algebra));
      WeightData wd = make_weight_data(rs, parse_weights(weights_arg), level);
      AlcoveTuple t = to_alcove(wd);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const QVec& mu : t.mus) arr.push_back(json_qvec(mu));
        out << nlohmann::json{{"mus", arr}}.dump() << "\n";
      } else {
        for (size_t i = 0; i < t.mus.size(); ++i) {
          Rat wall = 0;
          for (int j = 0; j < rs->rank; ++j) wall += rs->theta.rt[j] * t.mus[i][j];
          out << "mu_" << i + 1 << " = " << qvec_str(t.mus[i]) << "  theta(mu) = "
              << rat_str(wall) << "\n";
        }
      }
      return 0;
    }

    if (face_cmd->parsed()) {
      auto rs = std::make_shared<const RootSystem>(parse_root_system(algebra));
      WeightData wd = make_weight_data(rs, parse_weights(weights_arg), level);
      FaceSpec face = build_face(*rs, fo);
      OnFaceReport rep = on_face(wd, face);
      if (json) {
        nlohmann::json j{{"on_face", rep.on_face}, {"slack", json_rat(rep.slack)},
                         {"face", to_json(face)}};
        if (!rep.note.empty()) j["note"] = rep.note;
        out << j.dump() << "\n";
      } else {
        out << "slack = " << rat_str(rep.slack) << "  on_face = " << (rep.on_face ? "yes" : "no")
            << "  degree = " << face.degree
            << "  certified = " << (face.certified ? "yes" : "no") << "\n";
        if (!rep.note.empty()) out << rep.note << "\n";
      }
      return rep.on_face ? 0 : 1;
    }

    if (faces_cmd->parsed()) {
      auto kn = parse_long_list(grass_arg);
      if (kn.size() != 2) throw std::domain_error("--grassmannian expects \"k,n\"");
      auto faces = enumerate_faces_typeA(static_cast<int>(kn[0]), static_cast<int>(kn[1]),
                                         static_cast<int>(pts), dmax);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const FaceSpec& f : faces) arr.push_back(to_json(f));
        out << arr.dump() << "\n";
      } else {
        for (const FaceSpec& f : faces) {
          out << "d=" << f.degree << " cells=";
          for (size_t i = 0; i < f.subsets.size(); ++i) {
            if (i) out << ";";
            for (size_t j = 0; j < f.subsets[i].size(); ++j) {
              if (j) out << ",";
              out << f.subsets[i][j];
            }
          }
          out << "\n";
        }
        out << faces.size() << " faces\n";
      }
      return 0;
    }

    if (reduce_cmd->parsed() || verify_cmd->parsed() || rel_cmd->parsed()) {
      auto rs = std::make_shared<const RootSystem>(parse_root_system(algebra));
      WeightData wd = make_weight_data(rs, parse_weights(weights_arg), level);
      FaceSpec face = build_face(*rs, fo);

      if (reduce_cmd->parsed()) {
        ReducedData red = reduce(wd, face, force);
        if (json) {
          nlohmann::json factors = nlohmann::json::array();
          for (const ReducedFactor& f : red.factors) factors.push_back(to_json(f));
          nlohmann::json j{{"factors", factors}, {"face", to_json(face)},
                           {"degree_shift", red.shift ? to_json(*red.shift) : nlohmann::json()}};
          out << j.dump() << "\n";
        } else {
          for (const ReducedFactor& f : red.factors) {
            out << f.type_label << f.rank << " (nodes";
            for (int n : f.ambient_nodes) out << " " << n;
            out << ") level " << f.level << ": ";
            for (size_t i = 0; i < f.weights.size(); ++i)
              out << (i ? "; " : "") << weight_str(f.weights[i]);
            out << "\n";
          }
          if (red.shift)
            out << "k_L = " << red.shift->k_L << "  omega_P(mu_P) = " << red.shift->omega_P_of_mu_P
                << "  d_0 = " << red.shift->d_0 << "\n";
        }
        return 0;
      }

      if (verify_cmd->parsed()) {
        FactorizationReport rep = verify_factorization(wd, face, force);
        if (json) {
          out << to_json(rep, face).dump() << "\n";
        } else {
          out << "lhs rank = " << rep.lhs_rank.get_str() << "\n";
          for (size_t i = 0; i < rep.reduced.factors.size(); ++i) {
            const ReducedFactor& f = rep.reduced.factors[i];
            out << f.type_label << f.rank << " level " << f.level
                << " rank = " << rep.factor_ranks[i].get_str() << "\n";
          }
          out << "product = " << rep.product.get_str() << "  equal = "
              << (rep.equal ? "yes" : "no") << "\n";
        }
        return rep.equal ? 0 : 1;
      }

      DivisorRelationReport rep = check_divisor_relation(wd, face, force);
      if (json) {
        nlohmann::json fr = nlohmann::json::array();
        for (const Int& r : rep.factor_ranks) fr.push_back(json_int(r));
        nlohmann::json fc = nlohmann::json::array();
        for (const DivisorClass& c : rep.factor_classes) fc.push_back(to_json(c));
        nlohmann::json j{{"n", rep.n_points},       {"lhs", to_json(rep.lhs)},
                         {"rhs", to_json(rep.rhs)}, {"factor_ranks", fr},
                         {"factor_classes", fc},    {"equal", rep.equal}};
        out << j.dump() << "\n";
      } else {
        out << "lhs = " << to_json(rep.lhs)["coeffs"].dump() << "\n";
        out << "rhs = " << to_json(rep.rhs)["coeffs"].dump() << "\n";
        out << "equal = " << (rep.equal ? "yes" : "no") << "\n";
      }
      return rep.equal ? 0 : 1;
    }

    if (div_cmd->parsed()) {
      auto rs = std::make_shared<const RootSystem>(parse_root_system(algebra));
      WeightData wd = make_weight_data(rs, parse_weights(weights_arg), level);
      DivisorClass d = divisor_class_symmetrized(*shared_context(*rs, level), wd.weights);
      if (json) {
        out << to_json(d).dump() << "\n";
      } else {
        out << to_json(d)["coeffs"].dump() << "\n";
      }
      return 0;
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace cbred
