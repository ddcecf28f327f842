"""
Database models and functions using SQLAlchemy

The database is a ledger of certificates found by the solvers. Recording is
optional: :func:`init` needs to be called before :func:`record` or
:func:`history` are used, which happens on startup when recording is requested.
"""

import hashlib
import logging
import datetime
from typing import List, Optional

from sqlalchemy import create_engine, Column, DateTime, func, Integer, String, Text
from sqlalchemy.engine import Engine as _Engine
from sqlalchemy.orm import declarative_base, sessionmaker, Session


DEFAULT_DATABASE_URL: str = "sqlite:///./pcp_chain.db"

Base = declarative_base()
_engine: Optional[_Engine] = None
_make_session: Optional[sessionmaker] = None


class Certificate(Base):
    """
    Model of a witness found for some instance within some search bound
    """

    __tablename__ = "certificates"

    id: int = Column(Integer, nullable=False, primary_key=True, autoincrement=True, unique=True)
    problem: str = Column(String(8), nullable=False)
    """Tag of the problem of the instance"""
    fingerprint: str = Column(String(64), nullable=False, index=True)
    """SHA256 hex digest of the canonical instance text"""
    instance: str = Column(Text, nullable=False)
    """Canonical instance text"""
    witness: str = Column(Text, nullable=False)
    """Canonical witness text"""
    max_cards: int = Column(Integer, nullable=False)
    max_steps: int = Column(Integer, nullable=False)
    max_len: int = Column(Integer, nullable=False)
    explored: int = Column(Integer, nullable=False, default=0)
    """Number of search states the solver visited"""
    created: datetime.datetime = Column(DateTime, nullable=False, server_default=func.now())

    def __repr__(self) -> str:
        return f"Certificate(id={self.id}, problem={self.problem!r}, fingerprint={self.fingerprint[:12]!r})"


def fingerprint(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def init(database_url: str, create_all: bool = True):
    """
    Initialize the database connections

    :param database_url: the full URL to connect to the database (see
        https://docs.sqlalchemy.org/en/14/core/connections.html for details)
    :param create_all: whether the metadata of the declarative base should
        be used to create all non-existing tables in the database
    """

    global _engine, _make_session
    logging.getLogger("persistence").debug(f"Connecting to database {database_url!r}")
    if database_url.startswith("sqlite:"):
        _engine = create_engine(database_url, echo=False, connect_args={"check_same_thread": False})
    else:
        _engine = create_engine(database_url, echo=False)

    if create_all:
        Base.metadata.create_all(bind=_engine)

    _make_session = sessionmaker(autocommit=False, autoflush=False, bind=_engine)


def _warn(obj: str):
    logging.getLogger("persistence").warning(
        f"Database {obj} not initialized! Using default database URL with database "
        f"{DEFAULT_DATABASE_URL!r}. Call 'init' once at program startup to suppress this warning."
    )


def get_engine() -> _Engine:
    if _engine is None:
        _warn("engine")
        init(DEFAULT_DATABASE_URL)
    return _engine


def get_new_session() -> Session:
    if _make_session is None or _engine is None:
        _warn("engine or its session maker")
        init(DEFAULT_DATABASE_URL)
    return _make_session()


def record(
        problem: str,
        instance: str,
        witness: str,
        max_cards: int,
        max_steps: int,
        max_len: int,
        explored: int = 0
) -> Certificate:
    """
    Store a certificate in the ledger

    :param problem: problem tag
    :param instance: canonical instance text
    :param witness: canonical witness text
    :param max_cards: card bound of the search
    :param max_steps: step bound of the search
    :param max_len: length bound of the search
    :param explored: number of visited search states
    :return: the stored (and detached) certificate
    """

    certificate = Certificate(
        problem=problem,
        fingerprint=fingerprint(instance),
        instance=instance,
        witness=witness,
        max_cards=max_cards,
        max_steps=max_steps,
        max_len=max_len,
        explored=explored
    )
    with get_new_session() as session:
        session.add(certificate)
        session.commit()
        session.refresh(certificate)
        session.expunge(certificate)
    logging.getLogger("persistence").info(f"Recorded {certificate}")
    return certificate


def history(limit: int = 10, problem: Optional[str] = None) -> List[Certificate]:
    """
    Get the most recent certificates, newest first

    :param limit: maximal number of certificates
    :param problem: optional problem tag to filter for
    :return: list of detached certificates
    """

    with get_new_session() as session:
        query = session.query(Certificate)
        if problem is not None:
            query = query.filter(Certificate.problem == problem)
        certificates = query.order_by(Certificate.id.desc()).limit(limit).all()
        session.expunge_all()
    return certificates
