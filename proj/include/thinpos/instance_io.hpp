#pragma once

/*******************************************************************************

Instance files and the word text format.

An instance is a JSON document:

  {
    "name": "connected_sum",
    "bridge_index": 3,
    "surface_systems": [
      {
        "spheres": [ { "id": 1, "parent": null, "punctures": 2 } ],
        "graph_table": [
          { "region": 1, "signs": { "1": "+" },
            "bridge_number": 2, "admits_thinner": false },
          ...
        ]
      }
    ]
  }

Region 0 is the outside of all root spheres; region i is directly inside
sphere i. A graph_table row gives the bridge data of one region under one
boundary sign pattern, signs read as seen from that region. "notes" fields
are allowed anywhere and ignored. Sign values accept "-" and the minus sign
U+2212.

Word files are whitespace-separated tokens MIN, MAX, V+<d>, V-<d>, read
bottom to top; '#' starts a comment to end of line.

*******************************************************************************/

#include <string>
#include <vector>

#include <json.hpp>

#include "thinpos/errors.hpp"
#include "thinpos/morse.hpp"
#include "thinpos/search.hpp"

namespace thinpos {

// Parses and validates; throws ParseError on bad JSON and ValidationError
// (carrying every violation, with field locations) on bad content.
Instance parse_instance_file(const std::string& path);
Instance parse_instance_text(const std::string& text, const std::string& source_name);

// All violations instead of an exception; empty means valid. Bad JSON still
// throws ParseError.
std::vector<std::string> validate_instance_file(const std::string& path);

// Canonical JSON form of an instance: spheres by id, table rows in key
// order. parse(serialize(parse(f))) == parse(f).
nlohmann::ordered_json serialize_instance(const Instance& instance);

MorseWord parse_word_text(const std::string& text);
MorseWord parse_word_file(const std::string& path);
std::string word_to_text(const MorseWord& word);

}  // namespace thinpos
