// Copyright 2026 The mtadequacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mtadequacy/coverage.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "mtadequacy/error.hpp"

namespace mta {
namespace {

constexpr std::pair<CoverageKind, absl::string_view> kKindNames[] = {
    {CoverageKind::kIChoice, "i-choice"},
    {CoverageKind::kIChoicePair, "i-choice-pair"},
    {CoverageKind::kIoCtf, "io-ctf"},
    {CoverageKind::kStatement, "statement"},
    {CoverageKind::kBranch, "branch"},
};

absl::Status SpecError(absl::string_view message) {
  return MakeError(ErrorKind::kInvalidDefinition, message);
}

absl::StatusOr<std::vector<Category>> ParseCategories(const Json& json,
                                                      absl::string_view what) {
  std::vector<Category> out;
  if (json.is_null()) return out;
  if (!json.is_array()) return SpecError(absl::StrCat(what, " must be a list"));
  std::set<std::string> names;
  for (const Json& cat_json : json) {
    if (!cat_json.is_object() || !cat_json.contains("name") ||
        !cat_json["name"].is_string() || !cat_json.contains("choices") ||
        !cat_json["choices"].is_array()) {
      return SpecError(absl::StrCat("bad category in ", what, ": ", cat_json.dump()));
    }
    Category cat;
    cat.name = cat_json["name"].get<std::string>();
    if (!IsValidId(cat.name) || !names.insert(cat.name).second) {
      return SpecError(absl::StrCat("bad or duplicate category name '", cat.name, "'"));
    }
    std::set<std::string> choice_names;
    for (const Json& choice_json : cat_json["choices"]) {
      if (!choice_json.is_object() || !choice_json.contains("name") ||
          !choice_json["name"].is_string()) {
        return SpecError(absl::StrCat("bad choice in ", cat.name));
      }
      Choice choice;
      choice.name = choice_json["name"].get<std::string>();
      if (!IsValidId(choice.name) || !choice_names.insert(choice.name).second) {
        return SpecError(absl::StrCat("bad or duplicate choice name '", choice.name,
                                      "' in ", cat.name));
      }
      if (choice_json.contains("when")) {
        auto cond = Condition::FromJson(choice_json["when"]);
        if (!cond.ok()) return cond.status();
        choice.predicate = *std::move(cond);
      }
      cat.choices.push_back(std::move(choice));
    }
    out.push_back(std::move(cat));
  }
  return out;
}

const Category* FindCategory(const std::vector<Category>& cats, absl::string_view name) {
  for (const auto& cat : cats) {
    if (cat.name == name) return &cat;
  }
  return nullptr;
}

absl::StatusOr<std::vector<std::pair<std::string, std::string>>> ParseFrameChoices(
    const Json& json, const std::vector<Category>& cats, absl::string_view frame) {
  std::vector<std::pair<std::string, std::string>> out;
  if (json.is_null()) return out;
  if (!json.is_object()) return SpecError(absl::StrCat("frame ", frame, ": bad choices"));
  for (const auto& [cat_name, choice] : json.items()) {
    const Category* cat = FindCategory(cats, cat_name);
    if (!cat || !choice.is_string()) {
      return SpecError(absl::StrCat("frame ", frame, " names unknown category ", cat_name));
    }
    const std::string name = choice.get<std::string>();
    if (std::none_of(cat->choices.begin(), cat->choices.end(),
                     [&](const Choice& c) { return c.name == name; })) {
      return SpecError(absl::StrCat("frame ", frame, " names unknown choice ",
                                    cat_name, ".", name));
    }
    out.emplace_back(cat_name, name);
  }
  return out;
}

int CategoryIndex(const std::vector<Category>& cats, absl::string_view name) {
  for (std::size_t i = 0; i < cats.size(); ++i) {
    if (cats[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int ChoiceIndex(const Category& cat, absl::string_view name) {
  for (std::size_t i = 0; i < cat.choices.size(); ++i) {
    if (cat.choices[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

// The choice an input falls into for each category, "" for none.
absl::StatusOr<std::map<std::string, std::string>> ClassifyInput(
    const std::vector<Category>& cats, const TestInput& input) {
  std::map<std::string, std::string> out;
  for (const auto& cat : cats) {
    std::string match;
    for (const auto& choice : cat.choices) {
      auto ok = choice.predicate.Evaluate(input.payload);
      if (!ok.ok()) {
        return MakeError(ErrorKind::kMissingField,
                         absl::StrCat("input ", input.id, ", choice ", cat.name, ".",
                                      choice.name, ": ", ok.status().message()));
      }
      if (!*ok) continue;
      if (!match.empty()) {
        return MakeError(ErrorKind::kAmbiguousChoice,
                         absl::StrCat("input ", input.id, " matches both ", cat.name,
                                      ".", match, " and ", cat.name, ".", choice.name));
      }
      match = choice.name;
    }
    out[cat.name] = match;
  }
  return out;
}

}  // namespace

absl::string_view CoverageKindName(CoverageKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

absl::StatusOr<CoverageKind> ParseCoverageKind(absl::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return MakeError(ErrorKind::kUnsupportedCriterion,
                   absl::StrCat("unknown coverage criterion '", name, "'"));
}

absl::StatusOr<CategoryChoiceSpec> CategoryChoiceSpec::FromJson(const Json& json) {
  if (!json.is_object()) return SpecError("category-choice spec must be an object");
  CategoryChoiceSpec spec;
  auto i_cats = ParseCategories(json.value("i_categories", Json()), "i_categories");
  if (!i_cats.ok()) return i_cats.status();
  spec.i_categories_ = *std::move(i_cats);
  auto o_cats = ParseCategories(json.value("o_categories", Json()), "o_categories");
  if (!o_cats.ok()) return o_cats.status();
  spec.o_categories_ = *std::move(o_cats);
  std::set<std::string> frame_ids;
  for (const Json& frame_json : json.value("frames", Json::array())) {
    if (!frame_json.is_object() || !frame_json.contains("id") ||
        !frame_json["id"].is_string()) {
      return SpecError(absl::StrCat("frame needs an id: ", frame_json.dump()));
    }
    TestFrame frame;
    frame.id = frame_json["id"].get<std::string>();
    if (!IsValidId(frame.id) || !frame_ids.insert(frame.id).second) {
      return SpecError(absl::StrCat("bad or duplicate frame id '", frame.id, "'"));
    }
    auto i = ParseFrameChoices(frame_json.value("i", Json()), spec.i_categories_, frame.id);
    if (!i.ok()) return i.status();
    frame.i_choices = *std::move(i);
    auto o = ParseFrameChoices(frame_json.value("o", Json()), spec.o_categories_, frame.id);
    if (!o.ok()) return o.status();
    frame.o_choices = *std::move(o);
    spec.frames_.push_back(std::move(frame));
  }
  return spec;
}

Json CategoryChoiceSpec::ToJson() const {
  auto cats_json = [](const std::vector<Category>& cats) {
    Json out = Json::array();
    for (const auto& cat : cats) {
      Json choices = Json::array();
      for (const auto& choice : cat.choices) {
        choices.push_back({{"name", choice.name}, {"when", choice.predicate.ToJson()}});
      }
      out.push_back({{"name", cat.name}, {"choices", std::move(choices)}});
    }
    return out;
  };
  Json frames = Json::array();
  for (const auto& frame : frames_) {
    Json i = Json::object(), o = Json::object();
    for (const auto& [cat, choice] : frame.i_choices) i[cat] = choice;
    for (const auto& [cat, choice] : frame.o_choices) o[cat] = choice;
    frames.push_back({{"id", frame.id}, {"i", std::move(i)}, {"o", std::move(o)}});
  }
  return {{"i_categories", cats_json(i_categories_)},
          {"o_categories", cats_json(o_categories_)},
          {"frames", std::move(frames)}};
}

absl::StatusOr<std::vector<TestRequirement>> EnumerateRequirements(
    const CategoryChoiceSpec& spec, CoverageKind kind) {
  std::vector<TestRequirement> out;
  const auto& cats = spec.i_categories();
  switch (kind) {
    case CoverageKind::kIChoice:
      for (const auto& cat : cats) {
        for (const auto& choice : cat.choices) {
          std::string id = absl::StrCat(cat.name, ".", choice.name);
          out.push_back({id, kind, {id}});
        }
      }
      return out;
    case CoverageKind::kIChoicePair: {
      // (cat a, choice a, cat b, choice b) with cat a < cat b.
      std::set<std::tuple<int, int, int, int>> pairs;
      for (const auto& frame : spec.frames()) {
        for (std::size_t x = 0; x < frame.i_choices.size(); ++x) {
          for (std::size_t y = x + 1; y < frame.i_choices.size(); ++y) {
            int ca = CategoryIndex(cats, frame.i_choices[x].first);
            int cb = CategoryIndex(cats, frame.i_choices[y].first);
            if (ca == cb) continue;
            int ha = ChoiceIndex(cats[ca], frame.i_choices[x].second);
            int hb = ChoiceIndex(cats[cb], frame.i_choices[y].second);
            if (ca > cb) {
              std::swap(ca, cb);
              std::swap(ha, hb);
            }
            pairs.emplace(ca, ha, cb, hb);
          }
        }
      }
      for (const auto& [ca, ha, cb, hb] : pairs) {
        std::string a = absl::StrCat(cats[ca].name, ".", cats[ca].choices[ha].name);
        std::string b = absl::StrCat(cats[cb].name, ".", cats[cb].choices[hb].name);
        out.push_back({absl::StrCat(a, "__", b), kind, {a, b}});
      }
      return out;
    }
    case CoverageKind::kIoCtf:
      for (const auto& frame : spec.frames()) out.push_back({frame.id, kind, {frame.id}});
      return out;
    case CoverageKind::kStatement:
    case CoverageKind::kBranch:
      break;
  }
  return MakeError(ErrorKind::kUnsupportedCriterion,
                   absl::StrCat(CoverageKindName(kind),
                                " coverage is ingested from a matrix, not enumerated"));
}

absl::StatusOr<CoverageMap> CoverageMap::Create(
    CoverageKind kind, std::vector<TestRequirement> requirements,
    std::vector<std::string> input_ids, std::vector<std::vector<bool>> sat) {
  std::set<absl::string_view> seen;
  for (const auto& r : requirements) {
    if (!IsValidId(r.id) || !seen.insert(r.id).second) {
      return MakeError(ErrorKind::kInvalidDefinition,
                       absl::StrCat("bad or duplicate requirement id '", r.id, "'"));
    }
  }
  seen.clear();
  for (const auto& id : input_ids) {
    if (!IsValidId(id) || !seen.insert(id).second) {
      return MakeError(ErrorKind::kInvalidDefinition,
                       absl::StrCat("bad or duplicate input id '", id, "'"));
    }
  }
  if (sat.size() != input_ids.size()) {
    return MakeError(ErrorKind::kInvalidDefinition, "coverage matrix row count mismatch");
  }
  for (const auto& row : sat) {
    if (row.size() != requirements.size()) {
      return MakeError(ErrorKind::kInvalidDefinition,
                       "coverage matrix column count mismatch");
    }
  }
  CoverageMap map;
  map.kind_ = kind;
  map.requirements_ = std::move(requirements);
  map.input_ids_ = std::move(input_ids);
  map.sat_ = std::move(sat);
  return map;
}

bool CoverageMap::Sat(absl::string_view input_id, absl::string_view requirement_id) const {
  auto row = std::find(input_ids_.begin(), input_ids_.end(), input_id);
  auto col = std::find_if(requirements_.begin(), requirements_.end(),
                          [&](const auto& r) { return r.id == requirement_id; });
  if (row == input_ids_.end() || col == requirements_.end()) return false;
  return sat_[row - input_ids_.begin()][col - requirements_.begin()];
}

std::vector<std::string> CoverageMap::SatisfyingInputs(std::size_t requirement) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < input_ids_.size(); ++i) {
    if (sat_[i][requirement]) out.push_back(input_ids_[i]);
  }
  return out;
}

std::vector<std::string> CoverageMap::InfeasibleRequirements() const {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < requirements_.size(); ++r) {
    bool any = false;
    for (const auto& row : sat_) any = any || row[r];
    if (!any) out.push_back(requirements_[r].id);
  }
  return out;
}

absl::StatusOr<CoverageMap> CoverageMap::RestrictInputs(
    std::span<const std::string> ids) const {
  CoverageMap out;
  out.kind_ = kind_;
  out.requirements_ = requirements_;
  for (const auto& id : ids) {
    auto row = std::find(input_ids_.begin(), input_ids_.end(), id);
    if (row == input_ids_.end()) {
      return MakeError(ErrorKind::kUnknownInputId,
                       absl::StrCat("input ", id, " has no coverage row"));
    }
    out.input_ids_.push_back(id);
    out.sat_.push_back(sat_[row - input_ids_.begin()]);
  }
  return out;
}

CoverageMap CoverageMap::WithoutRequirements(std::span<const std::string> ids) const {
  const std::set<std::string> drop(ids.begin(), ids.end());
  CoverageMap out;
  out.kind_ = kind_;
  out.input_ids_ = input_ids_;
  out.sat_.resize(sat_.size());
  for (std::size_t r = 0; r < requirements_.size(); ++r) {
    if (drop.contains(requirements_[r].id)) continue;
    out.requirements_.push_back(requirements_[r]);
    for (std::size_t i = 0; i < sat_.size(); ++i) out.sat_[i].push_back(sat_[i][r]);
  }
  return out;
}

absl::StatusOr<CoverageMap> BuildCoverageMap(const CategoryChoiceSpec& spec,
                                             CoverageKind kind,
                                             std::span<const TestInput> inputs) {
  auto requirements = EnumerateRequirements(spec, kind);
  if (!requirements.ok()) return requirements.status();
  std::vector<std::string> ids;
  std::vector<std::vector<bool>> sat;
  for (const auto& input : inputs) {
    auto in = ClassifyInput(spec.i_categories(), input);
    if (!in.ok()) return in.status();
    std::map<std::string, std::string> out;
    if (kind == CoverageKind::kIoCtf) {
      auto classified = ClassifyInput(spec.o_categories(), input);
      if (!classified.ok()) return classified.status();
      out = *std::move(classified);
    }
    auto has = [](const std::map<std::string, std::string>& cls,
                  absl::string_view qualified) {
      const auto dot = qualified.find('.');
      auto it = cls.find(std::string(qualified.substr(0, dot)));
      return it != cls.end() && it->second == qualified.substr(dot + 1);
    };
    std::vector<bool> row;
    for (const auto& req : *requirements) {
      bool ok = true;
      if (kind == CoverageKind::kIoCtf) {
        const TestFrame& frame = *std::find_if(
            spec.frames().begin(), spec.frames().end(),
            [&](const TestFrame& f) { return f.id == req.id; });
        for (const auto& [cat, choice] : frame.i_choices) ok = ok && in->at(cat) == choice;
        for (const auto& [cat, choice] : frame.o_choices) ok = ok && out.at(cat) == choice;
      } else {
        for (const auto& element : req.descriptor) ok = ok && has(*in, element);
      }
      row.push_back(ok);
    }
    ids.push_back(input.id);
    sat.push_back(std::move(row));
  }
  return CoverageMap::Create(kind, *std::move(requirements), std::move(ids),
                             std::move(sat));
}

absl::StatusOr<CoverageMap> ParseCoverageMatrix(absl::string_view text, CoverageKind kind,
                                                std::span<const std::string> known_inputs) {
  auto parse_error = [](int line, absl::string_view what) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("coverage matrix line ", line, ": ", what));
  };
  std::vector<absl::string_view> lines = absl::StrSplit(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) return parse_error(1, "missing header");
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  std::vector<absl::string_view> header = absl::StrSplit(lines[0], ',');
  if (header[0] != "input_id") return parse_error(1, "header must start with input_id");
  std::vector<TestRequirement> requirements;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (!IsValidId(header[c])) {
      return parse_error(1, absl::StrCat("bad requirement id '", header[c], "'"));
    }
    requirements.push_back({std::string(header[c]), kind, {std::string(header[c])}});
  }
  const std::set<absl::string_view> known(known_inputs.begin(), known_inputs.end());
  std::vector<std::string> ids;
  std::vector<std::vector<bool>> sat;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const int line_no = static_cast<int>(l) + 1;
    std::vector<absl::string_view> cells = absl::StrSplit(lines[l], ',');
    if (cells.size() != header.size()) return parse_error(line_no, "wrong cell count");
    if (!IsValidId(cells[0])) {
      return parse_error(line_no, absl::StrCat("bad input id '", cells[0], "'"));
    }
    if (!known.empty() && !known.contains(cells[0])) {
      return MakeError(ErrorKind::kUnknownInputId,
                       absl::StrCat("coverage matrix names unknown input ", cells[0]));
    }
    std::vector<bool> row;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c] != "0" && cells[c] != "1") {
        return parse_error(line_no, absl::StrCat("cell '", cells[c], "' is not 0 or 1"));
      }
      row.push_back(cells[c] == "1");
    }
    ids.emplace_back(cells[0]);
    sat.push_back(std::move(row));
  }
  auto map = CoverageMap::Create(kind, std::move(requirements), std::move(ids),
                                 std::move(sat));
  if (!map.ok()) return MakeError(ErrorKind::kParseError, map.status().message());
  return map;
}

std::string SerializeCoverageMatrix(const CoverageMap& map) {
  std::string out = "input_id";
  for (const auto& r : map.requirements()) absl::StrAppend(&out, ",", r.id);
  out += "\n";
  for (std::size_t i = 0; i < map.input_ids().size(); ++i) {
    out += map.input_ids()[i];
    for (std::size_t r = 0; r < map.requirements().size(); ++r) {
      out += map.Sat(i, r) ? ",1" : ",0";
    }
    out += "\n";
  }
  return out;
}

}  // namespace mta
