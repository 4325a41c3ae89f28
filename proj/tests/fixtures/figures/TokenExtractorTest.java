package org.example.auth;

import org.junit.Test;

public class TokenExtractorTest {
    private final TokenExtractor extractor = new TokenExtractor();

    @Test(expected = AuthenticationException.class)
    public void shouldThrowExceptionWhenTokenIsAbsent() {
        Response response = new Response(401);
        extractor.extract(response);
    }
}
