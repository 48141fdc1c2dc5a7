from dotenv import load_dotenv

load_dotenv()

from app.main import app  # noqa: E402

# Vercel expects the app to be available at the module level
handler = app
