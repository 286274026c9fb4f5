"""Summarize the bundled Bengali news article and compare against LEAD.

Background IDF comes from the article's own sentences, each treated as a
document, since no other Bengali corpus ships with the package.

    python scripts/example_article.py [--budget-words N]
"""

import argparse
from pathlib import Path

from extractsum import build_idf, lead_baseline, load_stopwords, load_suffixes, preprocess, rank, summarize
from extractsum.evaluator import unigram_recall
from extractsum.summarizer import Budget
from extractsum.textproc import count_words, normalize_text, segment_sentences

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--budget-words", type=int, help="default: reference summary length")
    args = parser.parse_args()

    sw, sf = load_stopwords(), load_suffixes()
    text = (FIXTURES / "article_alfa.txt").read_text(encoding="utf-8")
    reference = (FIXTURES / "reference_alfa.txt").read_text(encoding="utf-8")
    published = (FIXTURES / "published_system_alfa.txt").read_text(encoding="utf-8")

    doc = preprocess(text, sw, sf, doc_id="article_alfa")
    idf = build_idf([preprocess(s, sw, sf) for s in segment_sentences(normalize_text(text))])
    n = args.budget_words or count_words(reference)

    ranked = rank(doc, idf)
    summary = summarize(doc, ranked, Budget.words(n))
    lead = lead_baseline(doc, n)

    print(f"sentences={len(doc.sentences)} idf_docs={idf.n_docs} budget={n} words")
    print("top ranked:", " ".join(f"{r.index}:{r.score:.3f}" for r in ranked[:8]))
    print(f"selected {list(summary.selected)} ({summary.word_count} words)\n")
    print(summary.text, "\n")
    print(f"recall system    {unigram_recall(summary.text, reference):.4f}")
    print(f"recall LEAD      {unigram_recall(lead.text, reference):.4f}")
    print(f"recall published {unigram_recall(published, reference):.4f}")


if __name__ == "__main__":
    main()
