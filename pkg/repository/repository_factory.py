from repository.implementation.memory_repository import InMemoryRepository


def create_memory_repository() -> InMemoryRepository:
    """
    Create an in-memory repository instance

    Returns:
        A repository whose stores live for the lifetime of the process
    """
    return InMemoryRepository()
