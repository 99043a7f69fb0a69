// jsdom ships no 2d canvas; painting is cosmetic and the view already
// skips it when the context is unavailable, so stub it out quietly.
(HTMLCanvasElement.prototype as unknown as { getContext: () => null }).getContext = () => null;
