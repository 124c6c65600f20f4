#pragma once

#include <string>

#include "polarrec/config.hpp"
#include "polarrec/corpus.hpp"
#include "polarrec/evalmetrics.hpp"
#include "polarrec/filterpipe.hpp"
#include "polarrec/recommender.hpp"
#include "polarrec/stance.hpp"
#include "polarrec/textproc.hpp"
#include "polarrec/vectorspace.hpp"

namespace polarrec::session {

// Outputs of the pipeline stage: ingestion, filtering, vector space and
// stance profiles. Recommendation and evaluation build on top of this.
struct PipelineOutput {
    corpus::Corpus corpus;
    textproc::StopwordSet stoplist;
    filterpipe::PipelineResult filter;
    vectorspace::VectorSpace space;
    stance::ProfileResult profiles;
};

// Runs ingestion -> filter pipeline -> vocabulary -> stance profiling.
PipelineOutput run_pipeline(const config::RunConfig& cfg);

// Writes stage_report.json, classification_report.json, index.tsv and
// profiles.jsonl under cfg.out_dir.
void write_pipeline_outputs(const PipelineOutput& out, const config::RunConfig& cfg);

// Restores enough pipeline state from cfg.out_dir (plus the input files) to
// recommend and evaluate: corpus, stopwords, index dump and profile dump.
struct LoadedArtifacts {
    corpus::Corpus corpus;
    textproc::StopwordSet stoplist;
    vectorspace::VectorSpace space;
    stance::ProfileResult profiles;
};
LoadedArtifacts load_artifacts(const config::RunConfig& cfg);

// Candidate sampling with the config's parameters; seed stream is derived
// from the master seed.
recommender::CandidateSet build_candidates(const LoadedArtifacts& artifacts,
                                           const config::RunConfig& cfg);

}  // namespace polarrec::session
