// src/scorer.cc

// Copyright 2026  Spoofkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "spoofkit/scorer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spoofkit/error.h"

namespace spoofkit {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;  // ln(2*pi)

double diag_log_density(const UttEmbedding& e, const std::vector<double>& mean,
                        const std::vector<double>& var) {
  double acc = 0.0;
  for (std::size_t d = 0; d < e.size(); ++d) {
    const double diff = e[d] - mean[d];
    acc += kLog2Pi + std::log(var[d]) + diff * diff / var[d];
  }
  return -0.5 * acc;
}

void class_stats(const std::vector<const UttEmbedding*>& members,
                 std::vector<double>* mean, std::vector<double>* var) {
  const std::size_t dim = members.front()->size();
  mean->assign(dim, 0.0);
  var->assign(dim, 0.0);
  for (const UttEmbedding* e : members)
    for (std::size_t d = 0; d < dim; ++d) (*mean)[d] += (*e)[d];
  for (std::size_t d = 0; d < dim; ++d) (*mean)[d] /= members.size();
  for (const UttEmbedding* e : members)
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = (*e)[d] - (*mean)[d];
      (*var)[d] += diff * diff;
    }
  for (std::size_t d = 0; d < dim; ++d)
    (*var)[d] = std::max((*var)[d] / members.size(), kVarianceFloor);
}

void write_vector(std::ostream& os, const char* name,
                  const std::vector<double>& v) {
  os << name;
  char buf[40];
  for (double x : v) {
    std::snprintf(buf, sizeof(buf), " %.17g", x);
    os << buf;
  }
  os << '\n';
}

std::vector<double> parse_vector(const std::string& line, const char* name,
                                 const std::string& path) {
  std::istringstream ls(line);
  std::string key;
  ls >> key;
  if (key != name)
    throw Error(ErrorKind::IoError, path + ": expected " + name + ", got " + key);
  std::vector<double> v;
  double x;
  while (ls >> x) v.push_back(x);
  return v;
}

}  // namespace

UttEmbedding pool(const FeatureMatrix& f) {
  if (f.frames < 1)
    throw Error(ErrorKind::EmptyFeature, "cannot pool an empty feature matrix");

  UttEmbedding e(2 * static_cast<std::size_t>(f.dims), 0.0);
  for (int t = 0; t < f.frames; ++t)
    for (int d = 0; d < f.dims; ++d) e[d] += f.at(t, d);
  for (int d = 0; d < f.dims; ++d) e[d] /= f.frames;
  for (int t = 0; t < f.frames; ++t)
    for (int d = 0; d < f.dims; ++d) {
      const double diff = f.at(t, d) - e[d];
      e[f.dims + d] += diff * diff;
    }
  for (int d = 0; d < f.dims; ++d)
    e[f.dims + d] = std::sqrt(e[f.dims + d] / f.frames);
  return e;
}

GaussianScorer fit(const std::vector<UttEmbedding>& embeddings,
                   const std::vector<Label>& labels) {
  if (embeddings.size() != labels.size())
    throw Error(ErrorKind::DimMismatch, "embeddings and labels differ in count");

  std::vector<const UttEmbedding*> genuine, fake;
  for (std::size_t i = 0; i < embeddings.size(); ++i)
    (labels[i] == Label::Genuine ? genuine : fake).push_back(&embeddings[i]);

  if (genuine.empty() || fake.empty())
    throw Error(ErrorKind::MissingClass, "need both genuine and fake examples");
  if (genuine.size() < 2 || fake.size() < 2)
    throw Error(ErrorKind::TooFewExamples, "need >= 2 examples per class");

  const std::size_t dim = genuine.front()->size();
  for (const UttEmbedding& e : embeddings)
    if (e.size() != dim)
      throw Error(ErrorKind::DimMismatch, "embedding dimensions differ");

  GaussianScorer s;
  class_stats(genuine, &s.mean_genuine, &s.var_genuine);
  class_stats(fake, &s.mean_fake, &s.var_fake);
  return s;
}

double score(const GaussianScorer& scorer, const UttEmbedding& e) {
  if (e.size() != scorer.dim())
    throw Error(ErrorKind::DimMismatch,
                "embedding dim " + std::to_string(e.size()) + " != model dim " +
                    std::to_string(scorer.dim()));
  return diag_log_density(e, scorer.mean_genuine, scorer.var_genuine) -
         diag_log_density(e, scorer.mean_fake, scorer.var_fake);
}

void save_scorer(const GaussianScorer& scorer, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);
  out << "spoofkit-gaussian-scorer v1\n";
  out << "feature_kind " << feature_kind_name(scorer.feature_kind) << '\n';
  out << "config_digest " << scorer.config_digest << '\n';
  out << "dim " << scorer.dim() << '\n';
  write_vector(out, "mean_genuine", scorer.mean_genuine);
  write_vector(out, "var_genuine", scorer.var_genuine);
  write_vector(out, "mean_fake", scorer.mean_fake);
  write_vector(out, "var_fake", scorer.var_fake);
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

GaussianScorer load_scorer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);

  std::string line;
  std::getline(in, line);
  if (line != "spoofkit-gaussian-scorer v1")
    throw Error(ErrorKind::IoError, path + ": not a scorer model file");

  GaussianScorer s;
  std::string key, value;
  std::getline(in, line);
  {
    std::istringstream ls(line);
    ls >> key >> value;
    if (key != "feature_kind") throw Error(ErrorKind::IoError, path + ": bad model");
    s.feature_kind = feature_kind_from_name(value);
  }
  std::getline(in, line);
  {
    std::istringstream ls(line);
    ls >> key >> s.config_digest;
    if (key != "config_digest") throw Error(ErrorKind::IoError, path + ": bad model");
  }
  std::size_t dim = 0;
  std::getline(in, line);
  {
    std::istringstream ls(line);
    ls >> key >> dim;
    if (key != "dim") throw Error(ErrorKind::IoError, path + ": bad model");
  }
  std::getline(in, line);
  s.mean_genuine = parse_vector(line, "mean_genuine", path);
  std::getline(in, line);
  s.var_genuine = parse_vector(line, "var_genuine", path);
  std::getline(in, line);
  s.mean_fake = parse_vector(line, "mean_fake", path);
  std::getline(in, line);
  s.var_fake = parse_vector(line, "var_fake", path);

  if (s.mean_genuine.size() != dim || s.var_genuine.size() != dim ||
      s.mean_fake.size() != dim || s.var_fake.size() != dim)
    throw Error(ErrorKind::ShapeMismatch, path + ": vector sizes disagree with dim");
  return s;
}

}  // namespace spoofkit
