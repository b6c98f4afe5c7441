from .embedder import HashedBagOfWordsEmbedder, cosine_similarity
from .messages import ChatMessage, CompletionRequest
from .remote import RemoteChatBackend, RemoteEmbedder
from .scripted import ScriptedChatBackend, ScriptEntry, parse_script

__all__ = [
    "HashedBagOfWordsEmbedder",
    "cosine_similarity",
    "ChatMessage",
    "CompletionRequest",
    "RemoteChatBackend",
    "RemoteEmbedder",
    "ScriptedChatBackend",
    "ScriptEntry",
    "parse_script",
]
