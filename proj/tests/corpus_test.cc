// Copyright 2026 The Sentest Authors
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

#include "sentest/corpus.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "sentest/determinism.h"
#include "sentest/errors.h"
#include "sentest/text.h"
#include "testing/synthetic.h"

namespace sentest {
namespace {

TEST(LoadCorpusTest, TwoLineJsonl) {
  const Corpus c = ParseCorpus(
      "{\"text\": \"What is a dog?\", \"label\": \"DESC\"}\n"
      "{\"text\": \"Who wrote Hamlet?\", \"label\": \"HUM\"}\n",
      CorpusFormat::kJsonl);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.samples[0].id, 0u);
  EXPECT_EQ(c.samples[1].id, 1u);
  EXPECT_EQ(c.samples[1].text, "Who wrote Hamlet?");
  EXPECT_EQ(c.labels, (std::vector<std::string>{"DESC", "HUM"}));
}

TEST(LoadCorpusTest, MissingLabelNamesTheLine) {
  try {
    ParseCorpus("{\"text\": \"a\", \"label\": \"x\"}\n{\"text\": \"b\"}\n",
                CorpusFormat::kJsonl);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("label"), std::string::npos);
  }
}

TEST(LoadCorpusTest, InvalidJsonLine) {
  EXPECT_THROW(ParseCorpus("{\"text\": \"a\", \n", CorpusFormat::kJsonl),
               ParseError);
  EXPECT_THROW(ParseCorpus("[1,2]\n", CorpusFormat::kJsonl), ParseError);
  EXPECT_THROW(ParseCorpus("{\"text\": 3, \"label\": \"x\"}\n",
                           CorpusFormat::kJsonl),
               ParseError);
}

TEST(LoadCorpusTest, BlankTextNamesTheSample) {
  try {
    ParseCorpus("{\"text\": \"ok\", \"label\": \"x\"}\n"
                "{\"text\": \"  \\t \", \"label\": \"x\"}\n",
                CorpusFormat::kJsonl);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("sample 1"), std::string::npos);
  }
}

TEST(LoadCorpusTest, MalformedUtf8) {
  EXPECT_THROW(ParseCorpus("{\"text\": \"caf\xC3\", \"label\": \"x\"}\n",
                           CorpusFormat::kJsonl),
               EncodingError);
}

TEST(LoadCorpusTest, CsvQuotedCommasAndQuotes) {
  const Corpus c = ParseCorpus(
      "text,label\n"
      "\"Hello, world\",greet\n"
      "\"She said \"\"hi\"\", then left\",quote\n"
      "\"two\nlines\",multi\n"
      "plain,greet\r\n",
      CorpusFormat::kCsv);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.samples[0].text, "Hello, world");
  EXPECT_EQ(c.samples[1].text, "She said \"hi\", then left");
  EXPECT_EQ(c.samples[2].text, "two\nlines");
  EXPECT_EQ(c.samples[3].text, "plain");
  EXPECT_EQ(c.samples[3].label, "greet");
}

TEST(LoadCorpusTest, CsvHeaderAndFieldCountErrors) {
  EXPECT_THROW(ParseCorpus("txt,lbl\na,b\n", CorpusFormat::kCsv), ParseError);
  try {
    ParseCorpus("text,label\na,b\nc\n", CorpusFormat::kCsv);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(ParseCorpus("text,label\n\"open,b\n", CorpusFormat::kCsv),
               ParseError);
}

TEST(LoadCorpusTest, CsvColumnOrderIsFree) {
  const Corpus c = ParseCorpus("label,text\nx,hello\n", CorpusFormat::kCsv);
  EXPECT_EQ(c.samples[0].text, "hello");
  EXPECT_EQ(c.samples[0].label, "x");
}

TEST(LoadCorpusTest, MissingFile) {
  EXPECT_THROW(LoadCorpus("/nonexistent/file.jsonl", CorpusFormat::kJsonl),
               IoError);
}

TEST(LoadCorpusTest, ReserializeIsIdentityOnPairs) {
  std::vector<std::pair<std::string, std::string>> records;
  const auto strings = testing::RandomStrings(300, 11);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    std::string t = strings[i];
    if (TrimAsciiSpace(t).empty()) t = "x" + t;
    records.emplace_back(t, "l" + std::to_string(i % 4) + (i % 7 ? "" : ",q\""));
  }
  const Corpus original = MakeCorpus("rt", records);
  for (CorpusFormat f : {CorpusFormat::kJsonl, CorpusFormat::kCsv}) {
    const Corpus back = ParseCorpus(SerializeCorpus(original, f), f);
    ASSERT_EQ(back.size(), original.size()) << CorpusFormatName(f);
    for (std::size_t i = 0; i < back.size(); ++i) {
      EXPECT_EQ(back.samples[i].text, original.samples[i].text);
      EXPECT_EQ(back.samples[i].label, original.samples[i].label);
    }
    EXPECT_EQ(back.labels, original.labels);
  }
}

TEST(CorpusStatsTest, HandCountedFixture) {
  const Corpus c = MakeCorpus("f", {{"ab cd", "x"}, {"ab", "y"}});
  const CorpusStats s = ComputeCorpusStats(c);
  EXPECT_EQ(s.num_samples, 2u);
  EXPECT_DOUBLE_EQ(s.avg_words, 1.5);
  EXPECT_EQ(s.vocab_size, 2u);
  EXPECT_EQ(s.label_histogram.at("x"), 1u);
  EXPECT_EQ(s.label_histogram.at("y"), 1u);
}

TEST(CorpusStatsTest, SingleSample) {
  const CorpusStats s = ComputeCorpusStats(MakeCorpus("f", {{"x", "a"}}));
  EXPECT_DOUBLE_EQ(s.avg_words, 1.0);
  EXPECT_EQ(s.vocab_size, 1u);
}

TEST(CorpusStatsTest, CountsCleanedWords) {
  // "Hello," and "hello" are one vocabulary item after cleaning.
  const Corpus c = MakeCorpus("f", {{"Hello, world!", "a"}, {"hello - there", "b"}});
  const CorpusStats s = ComputeCorpusStats(c);
  EXPECT_DOUBLE_EQ(s.avg_words, 2.0);
  EXPECT_EQ(s.vocab_size, 3u);
}

TEST(CorpusStatsTest, EmptyCorpusRejected) {
  EXPECT_THROW(ComputeCorpusStats(Corpus{}), InvalidArgumentError);
}

TEST(CorpusStatsTest, PermutationInvariant) {
  const Corpus c = testing::GrammarCorpus(120, 5);
  std::vector<std::pair<std::string, std::string>> records;
  for (const Sample& s : c.samples) records.emplace_back(s.text, s.label);
  RngStream rng{77};
  for (std::size_t i = records.size(); i-- > 1;) {
    std::swap(records[i], records[rng.Bounded(i + 1)]);
  }
  EXPECT_EQ(ComputeCorpusStats(c), ComputeCorpusStats(MakeCorpus("p", records)));
}

}  // namespace
}  // namespace sentest
