#include <gtest/gtest.h>

#include <sstream>

#include "t1p/families.hpp"
#include "t1p/json_io.hpp"
#include "t1p/pipeline.hpp"

using namespace t1p;

TEST(Json, EmbeddingRoundTrip) {
    Planted p = gen_planted_t1p(15, 4, 3);
    Json j = embedding_to_json(p.embedding);
    T1PEmbedding back = embedding_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.skeleton, p.embedding.skeleton);
    EXPECT_EQ(back.crossing_set(), p.embedding.crossing_set());
    EXPECT_TRUE(validate_t1p(p.graph, back).ok);
    EXPECT_EQ(j["crossings"].size(), p.embedding.crossings.size());
}

TEST(Json, CountEncoding) {
    EXPECT_TRUE(count_to_json(Count(15)).is_number());
    EXPECT_EQ(count_to_json(Count(15)).get<std::uint64_t>(), 15u);
    Count big = Count(1) << 70;
    Json j = count_to_json(big);
    ASSERT_TRUE(j.is_string());
    EXPECT_EQ(j.get<std::string>(), "1180591620717411303424");
}

TEST(Json, ResultAndTrace) {
    RecognitionResult r = recognize(catalog_small("H7"));
    Json j = result_to_json(r);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["is_t1p"], true);
    EXPECT_EQ(j["count"], 4);
    EXPECT_TRUE(j["reason"].is_null());
    EXPECT_TRUE(j["witness"].is_object());
    EXPECT_EQ(j["trace_len"].get<size_t>(), r.trace.entries.size());
    std::istringstream lines(trace_to_jsonl(r.trace));
    std::string line;
    size_t n = 0;
    while (std::getline(lines, line)) {
        Json e = Json::parse(line);
        EXPECT_TRUE(e.contains("kind"));
        ++n;
    }
    EXPECT_EQ(n, r.trace.entries.size());

    RecognitionResult no = recognize(catalog_small("H1"));
    Json k = result_to_json(no);
    EXPECT_EQ(k["is_t1p"], false);
    EXPECT_EQ(k["count"], 0);
    EXPECT_TRUE(k["witness"].is_null());
    EXPECT_TRUE(k["reason"].is_string());
}
