"""Corpus construction: segmentation, sentence splitting, splits, I/O."""

from casebrief.corpus.io import (
    ProcessedCorpus,
    canonical_json,
    ingest_corpus,
    read_processed_corpus,
    read_raw_corpus,
    write_processed_corpus,
    write_raw_corpus,
)
from casebrief.corpus.normalize import normalize_section_name
from casebrief.corpus.segment import (
    compile_heading_pattern,
    default_patterns_path,
    ingest_brief,
    load_heading_patterns,
    segment_brief,
)
from casebrief.corpus.sentences import default_abbreviations_path, load_abbreviations, split_sentences
from casebrief.corpus.splits import label_distribution, make_splits
from casebrief.corpus.synthetic import generate_corpus
from casebrief.corpus.types import (
    BriefSection,
    CaseBrief,
    CorpusError,
    DatasetSplit,
    DocSentence,
    InvalidRatios,
    NoSectionsFound,
    RawBrief,
    Sentence,
)

__all__ = [
    "BriefSection",
    "CaseBrief",
    "CorpusError",
    "DatasetSplit",
    "DocSentence",
    "InvalidRatios",
    "NoSectionsFound",
    "ProcessedCorpus",
    "RawBrief",
    "Sentence",
    "canonical_json",
    "compile_heading_pattern",
    "default_abbreviations_path",
    "default_patterns_path",
    "generate_corpus",
    "ingest_brief",
    "ingest_corpus",
    "label_distribution",
    "load_abbreviations",
    "load_heading_patterns",
    "make_splits",
    "normalize_section_name",
    "read_processed_corpus",
    "read_raw_corpus",
    "segment_brief",
    "split_sentences",
    "write_processed_corpus",
    "write_raw_corpus",
]
