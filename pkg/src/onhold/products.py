"""Product-name dictionary used by term abstraction.

The default word set is the published list of project and sub-project names
whose word-vector similarity to the studied projects was 1.0, plus "Jetty"
(required so "jetty-9.3" style bug ids abstract like the other tracker ids;
the published list omits it while its own bug-id example uses it).

Matching is case-insensitive and word-bounded; a few entries contain dots
("Command.com", "Foo.bar") or digits ("4813", "Bzip2", "Log4j", "I18n").
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IoError

DEFAULT_PRODUCT_WORDS: tuple[str, ...] = (
    "4813", "Ant", "Apache", "Applet", "Argouml", "Auths", "Bzip2", "Camel",
    "Columba", "Command.com", "Crlf", "Cvs", "Cxf", "Distribution", "Ebcdic",
    "Ejb", "Emf", "File1", "Foo.bar", "Gerrit", "Git", "Hadoop", "Hdfs",
    "Hibernate", "I18n", "Inetd", "Java", "Jaxb", "Jdk", "Jedit", "Jetty",
    "Jfreechart", "Jira", "Jmeter", "Jpa", "Jruby", "Jsp", "Jsps", "Junit",
    "Jvm", "Jws", "Kaffe", "Launchd", "Linux", "Log4j", "Mapreduce", "Maven",
    "Memcache", "Myisam", "Namespaced", "Nls", "Ocl", "Openssl", "Passwd",
    "Pojo", "Postgres", "Prepending", "Pwd", "Readline", "Rmi", "Servlet",
    "Servlets", "Solaris", "Solr", "Squirrel", "Ssh", "Svn", "Symlink",
    "Symlinks", "Tmp", "Tomcat", "Unix", "Usecase", "Utf", "Vim", "Webapp",
    "Webapps", "Xerces", "Xinetd", "Yarn",
)


@dataclass(frozen=True)
class ProductDictionary:
    """Case-insensitive set of words treated as product/project names."""

    names: frozenset[str]

    def __post_init__(self):
        if not self.names:
            raise ValueError("product dictionary must not be empty")

    @classmethod
    def default(cls) -> "ProductDictionary":
        return cls(frozenset(w.lower() for w in DEFAULT_PRODUCT_WORDS))

    @classmethod
    def from_words(cls, words) -> "ProductDictionary":
        return cls(frozenset(w.strip().lower() for w in words if w.strip()))

    @classmethod
    def from_file(cls, path: str) -> "ProductDictionary":
        """Load one word per line; blank lines and # comments are skipped."""
        try:
            with open(path, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            raise IoError(str(path), str(exc)) from exc
        words = []
        for line in lines:
            word = line.split("#", 1)[0].strip()
            if word:
                words.append(word)
        if not words:
            raise IoError(str(path), "no product words found")
        return cls.from_words(words)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.names
