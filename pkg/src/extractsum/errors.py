"""Exception hierarchy shared by all pipeline stages."""


class SummarizerError(Exception):
    """Base class for every error raised by this package."""


class InvalidEncoding(SummarizerError, ValueError):
    pass


class EmptyCorpus(SummarizerError, ValueError):
    pass


class FormatError(SummarizerError, ValueError):
    pass


class IoFailure(SummarizerError, OSError):
    pass


class DomainError(SummarizerError, ValueError):
    pass


class EmptyDocument(SummarizerError, ValueError):
    pass


class EmptyReference(SummarizerError, ValueError):
    def __init__(self, doc_ids):
        self.doc_ids = list(doc_ids)
        super().__init__("empty reference summary for: " + ", ".join(map(str, self.doc_ids)))
